#include "doctest.h"

#include <set>

#include "fibonomial/sequences.hpp"
#include "fibonomial/tilings.hpp"

using namespace fibonomial;

namespace {

const IntPoly2 s = var_s();
const IntPoly2 t = var_t();

// Domino placements as bitmasks of start cells; no recursion shared with the
// enumerator. Circular mode adds the wrap domino on cells n and 1.
IntPoly2 bitmask_weight_sum(int n, Mode mode) {
  if (n == 0) return IntPoly2(mode == Mode::Linear ? 1L : 2L);
  IntPoly2 total;
  auto scan = [&](int first, int last, std::uint32_t extra_dominos) {
    const int len = last - first + 1;
    if (len < 0) return;
    for (std::uint32_t mask = 0; mask < (1u << std::max(len, 0)); ++mask) {
      if (mask & (mask << 1)) continue;                  // overlapping dominos
      if (len > 0 && (mask >> (len - 1)) & 1u) continue;  // domino past the end
      const auto d = static_cast<std::uint32_t>(__builtin_popcount(mask));
      total += st_monomial(static_cast<std::uint32_t>(len) - 2 * d, d + extra_dominos);
    }
  };
  scan(1, n, 0);
  if (mode == Mode::Circular && n >= 2) scan(2, n - 1, 1);
  return total;
}

std::size_t binomial_count(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_ui();
}

}  // namespace

TEST_CASE("strip enumeration examples") {
  CHECK(enum_strip(3, Mode::Linear).size() == 3);
  CHECK(enum_strip(3, Mode::Circular).size() == 4);
  CHECK(enum_strip(1, Mode::Linear, Restriction::FirstDomino).empty());
  CHECK(enum_strip(0, Mode::Linear, Restriction::FirstDomino).size() == 1);
  CHECK(enum_strip(0, Mode::Linear).front().tiles.front().kind == TileKind::Empty);
  CHECK(enum_strip(2, Mode::Circular).size() == 3);
  CHECK_THROWS_AS(enum_strip(3, Mode::Circular, Restriction::FirstDomino), std::invalid_argument);
}

TEST_CASE("strip weights") {
  const auto l3 = enum_strip(3, Mode::Linear);
  CHECK(strip_weight_st(l3[0], Mode::Linear) == s * s * s);
  StripTiling dm{3, 0, {{TileKind::Domino, 1}, {TileKind::Monomino, 3}}};
  CHECK(strip_weight_st(dm, Mode::Linear) == s * t);
  StripTiling circ{3, 0, {{TileKind::Monomino, 2}, {TileKind::CircularDomino, 3}}};
  CHECK(strip_weight_st(circ, Mode::Circular) == s * t);
  StripTiling empty{0, 0, {{TileKind::Empty, 1}}};
  CHECK(strip_weight_st(empty, Mode::Linear) == IntPoly2(1L));
  CHECK(strip_weight_st(empty, Mode::Circular) == IntPoly2(2L));

  StripTiling mmm{3, 0, {{TileKind::Monomino, 1}, {TileKind::Monomino, 2}, {TileKind::Monomino, 3}}};
  StripTiling md{3, 0, {{TileKind::Monomino, 1}, {TileKind::Domino, 2}}};
  CHECK(strip_weight_qfib(mmm) == QPoly(1L));
  CHECK(strip_weight_qfib(dm) == var_q());
  CHECK(strip_weight_qfib(md) == q_power(2));
  for (unsigned n = 0; n <= 15; ++n) {
    QPoly sum;
    for (const auto& tiling : enum_strip(static_cast<int>(n), Mode::Linear)) sum += strip_weight_qfib(tiling);
    CHECK(sum == q_fib(n + 1));
  }
}

TEST_CASE("restrictions") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& tiling : enum_strip(n, Mode::Linear, Restriction::FirstDomino))
      CHECK(tiling.tiles.front() == Tile{TileKind::Domino, 1});
    for (const auto& tiling : enum_strip(n, Mode::Linear, Restriction::FirstMonomino))
      CHECK(tiling.tiles.front() == Tile{TileKind::Monomino, 1});
    for (const auto& tiling : enum_strip(n, Mode::Linear, Restriction::LastDomino))
      CHECK(tiling.tiles.back() == Tile{TileKind::Domino, n - 1});
    CHECK(enum_strip(n, Mode::Linear, Restriction::FirstDomino).size() == fib(static_cast<unsigned>(n - 1)));
    CHECK(enum_strip(n, Mode::Linear, Restriction::LastDomino).size() == fib(static_cast<unsigned>(n - 1)));
    CHECK(enum_strip(n, Mode::Linear, Restriction::FirstMonomino).size() == fib(static_cast<unsigned>(n)));
  }
}

TEST_CASE("strip lemma against a bitmask oracle") {
  for (int n = 0; n <= 18; ++n) {
    IntPoly2 linear;
    IntPoly2 circular;
    std::set<std::string> seen;
    for (const auto& tiling : enum_strip(n, Mode::Linear)) {
      linear += strip_weight_st(tiling, Mode::Linear);
      seen.insert(encode(tiling));
    }
    for (const auto& tiling : enum_strip(n, Mode::Circular)) circular += strip_weight_st(tiling, Mode::Circular);
    CHECK(linear == bitmask_weight_sum(n, Mode::Linear));
    CHECK(circular == bitmask_weight_sum(n, Mode::Circular));
    CHECK(linear == lucas_poly(static_cast<unsigned>(n + 1)));
    CHECK(circular == circ_lucas_poly(static_cast<unsigned>(n)));
    CHECK(seen.size() == enum_strip(n, Mode::Linear).size());
    if (n >= 1) {
      CHECK(enum_strip(n, Mode::Linear).size() == fib(static_cast<unsigned>(n + 1)));
      CHECK(enum_strip(n, Mode::Circular).size() == lucas(static_cast<unsigned>(n)));
    }
  }
}

TEST_CASE("strips cover every cell exactly once") {
  for (int n = 0; n <= 9; ++n)
    for (Mode mode : {Mode::Linear, Mode::Circular})
      for (const auto& tiling : enum_strip(n, mode)) {
        std::vector<int> cover(static_cast<std::size_t>(n) + 1, 0);
        for (const Tile& tile : tiling.tiles) {
          if (tile.kind == TileKind::Empty) continue;
          ++cover[static_cast<std::size_t>(tile.start)];
          if (tile.kind == TileKind::Domino) ++cover[static_cast<std::size_t>(tile.start + 1)];
          if (tile.kind == TileKind::CircularDomino) ++cover[1];
        }
        for (int c = 1; c <= n; ++c) CHECK(cover[static_cast<std::size_t>(c)] == 1);
      }
}

TEST_CASE("partitions") {
  CHECK(enum_partitions(2, 2).size() == 6);
  CHECK(enum_partitions(0, 4).size() == 1);
  const auto p11 = enum_partitions(1, 1);
  REQUIRE(p11.size() == 2);
  CHECK(p11[0].parts() == std::vector<int>{0});
  CHECK(p11[1].parts() == std::vector<int>{1});
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      const auto all = enum_partitions(m, n);
      CHECK(all.size() == binomial_count(m + n, m));
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts() < all[i].parts());
      for (const auto& lambda : all) CHECK(complement(complement(lambda)) == lambda);
    }
  CHECK(complement(Partition({3, 3, 3, 1, 1}, 4)).parts() == std::vector<int>{5, 2, 2, 0});
  CHECK(complement(Partition({0, 0, 0}, 2)).parts() == std::vector<int>{3, 3});
  CHECK(complement(Partition({1}, 1)).parts() == std::vector<int>{0});
  CHECK(null_count(Partition({5, 2, 2, 0}, 5)) == 1);
  CHECK(null_count(Partition({0, 0}, 3)) == 2);
  CHECK(null_count(Partition({3, 3, 3, 1, 1}, 4)) == 0);
  CHECK_THROWS_AS(Partition({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({4}, 3), std::invalid_argument);
}

TEST_CASE("partition tiling enumeration") {
  const auto t11 = enum_partition_tilings(1, 1, Mode::Linear, Restriction::None, Restriction::FirstDomino);
  REQUIRE(t11.size() == 1);
  CHECK(t11[0].lambda.parts() == std::vector<int>{1});
  CHECK(enum_partition_tilings(2, 2, Mode::Linear, Restriction::None, Restriction::FirstDomino).size() == 6);
  CHECK(enum_partition_tilings(1, 1, Mode::Linear, Restriction::None, Restriction::LastDomino).size() == 1);

  int visited = 0;
  for_each_partition_tiling(3, 3, Mode::Linear, Restriction::None, Restriction::None, [&](const PartitionTiling&) {
    return ++visited < 5;
  });
  CHECK(visited == 5);

  for (const auto& tiling : enum_partition_tilings(3, 2, Mode::Linear, Restriction::None, Restriction::FirstDomino)) {
    for (std::size_t i = 0; i < tiling.rows.size(); ++i) CHECK(tiling.rows[i].length == tiling.lambda.parts()[i]);
    for (std::size_t j = 0; j < tiling.cols.size(); ++j) CHECK(tiling.cols[j].length == tiling.complement.parts()[j]);
  }
}

TEST_CASE("Sagan-Savage sums") {
  CHECK(sagan_savage_sum(1, 1, Mode::Linear) == s);
  CHECK(sagan_savage_sum(2, 2, Mode::Linear) == s * s * s * s + IntPoly2(3L) * s * s * t + IntPoly2(2L) * t * t);
  CHECK(sagan_savage_sum(1, 1, Mode::Circular) == IntPoly2(4L) * s);
  const QPoly q = var_q();
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
      const IntPoly2 linear = sagan_savage_sum(m, n, Mode::Linear);
      CHECK(linear == lucasnomial(um + un, um));
      CHECK(sagan_savage_sum(m, n, Mode::Circular) == IntPoly2(Integer(1) << (m + n)) * lucasnomial(um + un, um));
      CHECK(substitute_st(linear, q + QPoly(1L), -q) == gauss_binom(um + un, um));
      IntPoly2 by_weight;
      for (const auto& tiling : enum_partition_tilings(m, n, Mode::Linear, Restriction::None, Restriction::FirstDomino))
        by_weight += partition_weight_st(tiling, Mode::Linear);
      CHECK(by_weight == linear);
    }
}

TEST_CASE("circular corollary at s=t=1 via null counts") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      Integer total = 0;
      for (const auto& tiling : enum_partition_tilings(m, n, Mode::Circular, Restriction::None, Restriction::None)) {
        Integer w = 1;
        w <<= null_count(tiling.lambda) + null_count(tiling.complement);
        total += w;
      }
      CHECK(total == (Integer(1) << (m + n)) * fibonomial_int(static_cast<unsigned>(m + n), static_cast<unsigned>(m)));
    }
}

TEST_CASE("modified Fibonomial counts") {
  CHECK(modified_fibonomial_count(1, 1, FibonomialVariant::Unrestricted) == 3);
  CHECK(modified_fibonomial_count(1, 1, FibonomialVariant::Monomino) == 2);
  CHECK(modified_fibonomial_count(2, 1, FibonomialVariant::Unrestricted) == 5);
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      const auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
      CHECK(modified_fibonomial_count(m, n, FibonomialVariant::Unrestricted) == fibonomial_int(um + un + 2, un));
      CHECK(modified_fibonomial_count(m, n, FibonomialVariant::Monomino) == fibonomial_int(um + un + 1, un));
    }
}

TEST_CASE("extension classes") {
  const auto r11 = extension_classes(1, 1);
  CHECK(r11.restricted_total == 3);
  REQUIRE(r11.classes.size() == 2);
  std::multiset<long> sizes;
  for (const auto& cls : r11.classes) sizes.insert(cls.size.get_si());
  CHECK(sizes == std::multiset<long>{1, 2});

  const auto r22 = extension_classes(2, 2);
  CHECK(r22.restricted_total == fibonomial_int(6, 2));
  Integer covered = 0;
  for (const auto& cls : r22.classes) {
    covered += cls.size;
    if (cls.null_parts == 0) CHECK(cls.size == 1);
  }
  CHECK(covered == r22.restricted_total);

  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const auto report = extension_classes(m, n);
      Integer sum = 0;
      for (const auto& cls : report.classes) {
        CHECK(cls.size == cls.expected);
        sum += cls.size;
      }
      CHECK(sum == report.restricted_total);
    }
}

TEST_CASE("encodings") {
  StripTiling dm{3, 0, {{TileKind::Domino, 1}, {TileKind::Monomino, 3}}};
  CHECK(encode(dm) == "d1,m3");
  const auto tilings = enum_partition_tilings(1, 1, Mode::Linear, Restriction::None, Restriction::FirstDomino);
  CHECK(encode(tilings.front()) == "lambda=(1) rows=[m1] cols=[-]");
}
