#include "doctest.h"

#include <algorithm>
#include <set>

#include "fibonomial/errors.hpp"
#include "fibonomial/identities.hpp"
#include "fibonomial/sequences.hpp"
#include "fibonomial/staircase.hpp"
#include "fibonomial/tilings.hpp"

using namespace fibonomial;

namespace {

const QPoly q = var_q();

QPoly qf(int n, const Integer& base) { return q_fib(static_cast<unsigned>(n), base); }
QPoly qfb(int n, int k) { return q_fibonomial(static_cast<unsigned>(n), static_cast<unsigned>(k)); }
Integer F(int n) { return fib(static_cast<unsigned>(n)); }
QPoly gauss(int n, int k) { return gauss_binom(static_cast<unsigned>(n), static_cast<unsigned>(k)); }

const QPoly& only(const Values& v) {
  REQUIRE(v.size() == 1);
  return std::get<QPoly>(v[0]);
}

}  // namespace

TEST_CASE("catalog") {
  const auto& all = catalog();
  CHECK(all.size() == 21);
  std::set<std::string> ids;
  for (const auto& d : all) {
    ids.insert(d.id);
    CHECK(!d.statement.empty());
    CHECK(!d.params.empty());
    const auto grid = d.grid(d.reference_max);
    CHECK(!grid.empty());
    for (const auto& p : grid) CHECK(d.valid(p));
  }
  CHECK(ids.size() == all.size());
  CHECK(all.front().id == "G0");
  CHECK(find_identity("Q2").id == "Q2");
  CHECK_THROWS_AS(find_identity("Z9"), UnknownIdentity);
  CHECK_THROWS_AS(verify("Z9", {}), UnknownIdentity);
  CHECK_THROWS_AS(verify("B1", {{{"n", 3}, {"k", 3}}}), InvalidParams);
  CHECK_THROWS_AS(verify("G2", {{{"m", 1}}}), InvalidParams);
}

TEST_CASE("worked examples") {
  const auto& g7 = find_identity("G7");
  const Params m2{{"m", 2}};
  CHECK(only(g7.lhs(m2)) == QPoly(1L) + q + q * q);
  CHECK(only(g7.rhs(m2)) == only(g7.lhs(m2)));

  const auto& b1 = find_identity("B1");
  const Params b1p{{"n", 4}, {"k", 2}};
  CHECK(only(b1.lhs(b1p)) == QPoly(1L) + q + q * q);
  CHECK(only(b1.rhs(b1p)) == only(b1.lhs(b1p)));

  const auto& q1 = find_identity("Q1");
  const Params q1p{{"n", 3}, {"k", 1}};
  CHECK(only(q1.lhs(q1p)) == QPoly(1L) + q);
  CHECK(only(q1.rhs(q1p)) == QPoly(1L) + q);

  const auto& x1 = find_identity("X1");
  const auto x = x1.lhs({{"n", 4}, {"l", 2}});
  REQUIRE(x.size() == 1);
  CHECK(std::get<Integer>(x[0]) == evaluate(lucasnomial(4, 2), 3, -1));
}

TEST_CASE("small suite and reference suite") {
  const auto small = verify_suite(0);
  CHECK(small.pass);
  const auto suite = verify_suite(5);
  CHECK(suite.pass);
  CHECK(suite.reports.size() == 21);
  for (const auto& r : suite.reports) {
    CHECK_MESSAGE(r.pass, r.id);
    CHECK(!r.counterexample);
  }
  const auto again = verify_suite(5);
  REQUIRE(again.reports.size() == suite.reports.size());
  for (std::size_t i = 0; i < suite.reports.size(); ++i)
    CHECK(again.reports[i].points.size() == suite.reports[i].points.size());

  const auto reference = verify_reference_suite();
  CHECK(reference.pass);
  CHECK(reference.label == "reference");
}

TEST_CASE("negative control") {
  IdentityDescriptor broken = find_identity("G2");
  const auto rhs = broken.rhs;
  broken.rhs = [rhs](const Params& p) {
    Values v = rhs(p);
    if (p.at("m") == 2 && p.at("n") == 2) v[0] = std::get<QPoly>(v[0]) + q_power(7);
    return v;
  };
  const auto report = verify(broken, broken.grid(3));
  CHECK(!report.pass);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->params == Params{{"m", 2}, {"n", 2}});
  CHECK(report.counterexample->diff == "-q^7");
}

TEST_CASE("excluded points fail") {
  // a = n breaks the three-term expansion, n = 1 the complementary sum
  const auto& b3 = find_identity("B3");
  for (int n = 1; n <= 6; ++n) {
    const Params p{{"n", n}, {"a", n}};
    if (n == 1) continue;
    CHECK(only(b3.lhs(p)) != only(b3.rhs(p)));
  }
  const auto& b4 = find_identity("B4");
  CHECK(only(b4.lhs({{"n", 1}})) != only(b4.rhs({{"n", 1}})));
  CHECK(divisibility_fails(6, 4));
  CHECK(!divisibility_fails(6, 3));
  CHECK(!divisibility_fails(12, 4));
}

TEST_CASE("G2 terms from partition tilings") {
  const QPoly s = QPoly(1L) + q;
  const QPoly t = QPoly(-1L) * q;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      IntPoly2 full_row, short_row;
      for_each_partition_tiling(m, n, Mode::Linear, Restriction::None, Restriction::FirstDomino,
                                [&](const PartitionTiling& pt) {
                                  auto& part = pt.lambda.parts()[0] == n ? full_row : short_row;
                                  part += partition_weight_st(pt, Mode::Linear);
                                  return true;
                                });
      CHECK(substitute_st(full_row, s, t) == q_int(static_cast<unsigned>(n + 1)) * gauss(m + n - 1, n));
      CHECK(substitute_st(short_row, s, t) ==
            QPoly(-1L) * q * q_int(static_cast<unsigned>(m - 1)) * gauss(m + n - 1, m));
    }
}

TEST_CASE("Q1 and Q3 terms from staircase paths") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      QPoly first_i, first_l;
      for (const auto& st : enum_staircase(n, k))
        (st.rows[0].step == BarrierKind::I ? first_i : first_l) += staircase_weight(st);
      CHECK(first_i == qf(k + 1, F(n - k)) * qfb(n - 1, k));
      const QPoly second =
          k == 0 ? QPoly() : q_power(F(n - k) * F(k + 1)) * qf(n - k - 1, F(k)) * qfb(n - 1, k - 1);
      CHECK(first_l == second);
    }

  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<QPoly> terms(static_cast<std::size_t>(std::max(n - k - 1, 0)));
      QPoly tail;
      for (const auto& st : enum_staircase(n, k)) {
        std::size_t i = 0;
        while (i < st.rows.size() && st.rows[i].step == BarrierKind::I) ++i;
        if (i < st.rows.size() && !st.rows[i].boundary())
          terms.at(i) += staircase_weight(st);
        else
          tail += staircase_weight(st);
      }
      QPoly product(1L);
      for (int i = 0; i <= n - k - 2; ++i) {
        if (i > 0) product *= qf(k + 1, F(n - k - i + 1));
        const QPoly expected =
            k == 0 ? QPoly()
                   : q_power(F(k + 1) * F(n - k - i)) * qf(n - k - i - 1, F(k)) * product * qfb(n - i - 1, k - 1);
        CHECK(terms[static_cast<std::size_t>(i)] == expected);
      }
      QPoly all_i(1L);
      for (int j = 1; j <= n - k; ++j) all_i *= qf(k + 1, F(n - k - j + 1));
      CHECK(tail == all_i);
    }
}

TEST_CASE("G4 and G5 terms from partition tilings") {
  const QPoly s = QPoly(1L) + q;
  const QPoly t = QPoly(-1L) * q;
  const QPoly minus_q = t;
  auto power = [](const QPoly& base, int e) {
    QPoly r(1L);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      std::vector<IntPoly2> by_full_rows(static_cast<std::size_t>(m + 1));
      std::vector<IntPoly2> by_full_cols(static_cast<std::size_t>(n + 1));
      for_each_partition_tiling(m, n, Mode::Linear, Restriction::None, Restriction::FirstDomino,
                                [&](const PartitionTiling& pt) {
                                  const auto& parts = pt.lambda.parts();
                                  const auto full_rows = std::count(parts.begin(), parts.end(), n);
                                  const IntPoly2 w = partition_weight_st(pt, Mode::Linear);
                                  by_full_rows[static_cast<std::size_t>(full_rows)] += w;
                                  by_full_cols[static_cast<std::size_t>(n - parts[0])] += w;
                                  return true;
                                });
      const QPoly row_len = q_int(static_cast<unsigned>(n + 1));
      CHECK(substitute_st(by_full_rows[static_cast<std::size_t>(m)], s, t) == power(row_len, m));
      for (int i = 0; i < m; ++i)
        CHECK(substitute_st(by_full_rows[static_cast<std::size_t>(i)], s, t) ==
              minus_q * power(row_len, i) * q_int(static_cast<unsigned>(m - i - 1)) * gauss(m + n - i - 1, n - 1));
      for (int i = 0; i <= n; ++i)
        CHECK(substitute_st(by_full_cols[static_cast<std::size_t>(i)], s, t) ==
              power(minus_q * q_int(static_cast<unsigned>(m - 1)), i) * q_int(static_cast<unsigned>(n - i + 1)) *
                  gauss(m + n - i - 1, m - 1));
    }
}

TEST_CASE("Q2 terms from staircase paths") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      std::vector<QPoly> terms(static_cast<std::size_t>(k + 1));
      for (const auto& st : enum_staircase(n, k)) {
        std::size_t i = 0;
        while (st.rows[i].step == BarrierKind::L) ++i;
        terms.at(i) += staircase_weight(st);
      }
      Integer exponent = 0;
      QPoly product(1L);
      for (int i = 0; i <= k; ++i) {
        if (i > 0) {
          exponent += F(k - i + 2);
          product *= qf(n - k - 1, F(k - i + 1));
        }
        CHECK(terms[static_cast<std::size_t>(i)] ==
              q_power(F(n - k) * exponent) * product * qf(k - i + 1, F(n - k)) * qfb(n - i - 1, k - i));
      }
    }
}
