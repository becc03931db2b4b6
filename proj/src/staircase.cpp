#include "fibonomial/staircase.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fibonomial/sequences.hpp"

namespace fibonomial {

namespace {

Integer fib_at(int i) { return fib(static_cast<unsigned>(i)); }

void require_point(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("staircase: k=" + std::to_string(k) + " outside 0..n for n=" + std::to_string(n));
}

StripTiling shifted(const StripTiling& t, int offset) {
  StripTiling out = t;
  out.offset = offset;
  for (auto& tile : out.tiles) tile.start += offset;
  return out;
}

// Tiles of `row` lying inside cells from..to, as a strip with offset from-1.
StripTiling slice(const StripTiling& row, int from, int to) {
  StripTiling out;
  out.offset = from - 1;
  out.length = to >= from ? to - from + 1 : 0;
  for (const Tile& tile : row.tiles) {
    if (tile.kind == TileKind::Empty) continue;
    const int end = tile.kind == TileKind::Monomino ? tile.start : tile.start + 1;
    if (tile.start >= from && end <= to) out.tiles.push_back(tile);
  }
  if (out.length == 0) out.tiles = {{TileKind::Empty, from}};
  return out;
}

class StripCache {
 public:
  const std::vector<StripTiling>& get(int length) {
    auto it = cache_.find(length);
    if (it == cache_.end()) it = cache_.emplace(length, enum_strip(length, Mode::Linear)).first;
    return it->second;
  }

 private:
  std::unordered_map<int, std::vector<StripTiling>> cache_;
};

}  // namespace

QPoly coord_weight(const PartitionTiling& tiling) {
  const int m = tiling.lambda.rows();
  const int n = tiling.lambda.cols();
  Integer exponent = 0;
  for (std::size_t r = 0; r < tiling.rows.size(); ++r) {
    const int j = m - static_cast<int>(r);
    for (const Tile& tile : tiling.rows[r].tiles) {
      if (tile.kind == TileKind::CircularDomino) throw std::invalid_argument("coord_weight: linear tilings only");
      if (tile.kind == TileKind::Domino) exponent += fib_at(tile.start + 1) * fib_at(j);
    }
  }
  for (std::size_t idx = 0; idx < tiling.cols.size(); ++idx) {
    const int c = n - static_cast<int>(idx);
    const StripTiling& col = tiling.cols[idx];
    for (const Tile& tile : col.tiles) {
      if (tile.kind == TileKind::CircularDomino) throw std::invalid_argument("coord_weight: linear tilings only");
      if (tile.kind != TileKind::Domino) continue;
      const int top = tile.start + 1;
      exponent += top == col.length ? fib_at(c + 1) * fib_at(top) : fib_at(c) * fib_at(top);
    }
  }
  return q_power(exponent);
}

QPoly coord_partition_sum(int m, int n) {
  QPoly total;
  for_each_partition_tiling(m, n, Mode::Linear, Restriction::None, Restriction::LastDomino,
                            [&](const PartitionTiling& t) {
                              total += coord_weight(t);
                              return true;
                            });
  return total;
}

std::string path_string(const StaircaseTiling& tiling) {
  std::string s;
  for (const auto& row : tiling.rows) s += to_string(row.step);
  return s;
}

void for_each_staircase(int n, int k, const std::function<bool(const StaircaseTiling&)>& visit) {
  require_point(n, k);
  StripCache strips;
  StaircaseTiling t;
  t.n = n;
  t.k = k;
  t.rows.resize(static_cast<std::size_t>(n));
  std::function<bool(int, int)> rec = [&](int r, int p) {
    if (r > n) return p == 0 ? visit(t) : true;
    if (p > n - r + 1) return true;  // too few rows left to reach 0
    StaircaseRow& row = t.rows[static_cast<std::size_t>(r - 1)];
    row.row = r;
    row.length = n - r;
    row.point = p;
    const int l = row.length;
    if (p <= l) {
      row.step = BarrierKind::I;
      for (const auto& left : strips.get(p)) {
        row.tiled = left;
        if (!rec(r + 1, p)) return false;
      }
    }
    if (p >= 1 && p <= l - 1) {
      for (const auto& right : strips.get(l - p - 1)) {
        row.step = BarrierKind::L;
        row.point = p;
        row.tiled = shifted(right, p + 1);
        if (!rec(r + 1, p - 1)) return false;
      }
    }
    if (p == l + 1) {
      row.step = BarrierKind::L;
      row.point = p;
      row.tiled = shifted(strips.get(0).front(), p - 1);
      if (!rec(r + 1, p - 1)) return false;
    }
    return true;
  };
  rec(1, k);
}

std::vector<StaircaseTiling> enum_staircase(int n, int k) {
  std::vector<StaircaseTiling> out;
  for_each_staircase(n, k, [&](const StaircaseTiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<AnnotatedDomino> annotate(const StaircaseRow& row) {
  const Side side = row.step == BarrierKind::I ? Side::Left : Side::Right;
  std::vector<AnnotatedDomino> out;
  if (auto special = special_domino(row.length, row.point, row.step)) out.push_back(*special);
  for (auto& d : annotate_compartment(row.length, row.point, row.step, side, row.tiled)) out.push_back(std::move(d));
  return out;
}

QPoly staircase_weight(const StaircaseTiling& tiling) {
  Integer exponent = 0;
  for (const auto& row : tiling.rows)
    for (const auto& d : annotate(row)) exponent += d.exponent;
  return q_power(exponent);
}

QPoly staircase_sum(int n, int k) {
  QPoly total;
  for_each_staircase(n, k, [&](const StaircaseTiling& t) {
    total += staircase_weight(t);
    return true;
  });
  return total;
}

std::vector<BarrierTiling> induced_rows(const FullStaircaseTiling& tiling) {
  std::vector<BarrierTiling> out;
  int p = tiling.k;
  for (int r = 1; r <= tiling.n; ++r) {
    const StripTiling& row = tiling.rows[static_cast<std::size_t>(r - 1)];
    const int l = tiling.n - r;
    if (row.length != l) throw std::invalid_argument("full staircase tiling: row length mismatch");
    if (p > l + 1) throw std::invalid_argument("full staircase tiling: start point too large");
    BarrierTiling b;
    b.n = l;
    b.k = p;
    bool crossing = false;
    if (p >= 1 && p <= l - 1) {
      for (const Tile& tile : row.tiles)
        if (tile.kind == TileKind::Domino && tile.start == p) crossing = true;
    }
    if (p == l + 1) {
      b.kind = BarrierKind::L;
      b.left = slice(row, 1, l);
      b.right = slice(row, l + 1, l);
    } else if (crossing) {
      b.kind = BarrierKind::L;
      b.left = slice(row, 1, p - 1);
      b.right = slice(row, p + 2, l);
    } else {
      b.kind = BarrierKind::I;
      b.left = slice(row, 1, p);
      b.right = slice(row, p + 1, l);
    }
    if (b.kind == BarrierKind::L) --p;
    out.push_back(std::move(b));
  }
  return out;
}

std::string induced_path(const FullStaircaseTiling& tiling) {
  std::string s;
  for (const auto& b : induced_rows(tiling)) s += to_string(b.kind);
  return s;
}

void for_each_full_staircase(int n, int k, const std::function<bool(const FullStaircaseTiling&)>& visit) {
  require_point(n, k);
  StripCache strips;
  FullStaircaseTiling t;
  t.n = n;
  t.k = k;
  t.rows.resize(static_cast<std::size_t>(n));
  std::function<bool(int)> rec = [&](int r) {
    if (r > n) return visit(t);
    for (const auto& row : strips.get(n - r)) {
      t.rows[static_cast<std::size_t>(r - 1)] = row;
      if (!rec(r + 1)) return false;
    }
    return true;
  };
  rec(1);
}

std::vector<FullStaircaseTiling> enum_staircase_full(int n, int k) {
  std::vector<FullStaircaseTiling> out;
  for_each_full_staircase(n, k, [&](const FullStaircaseTiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

QPoly full_weight(const FullStaircaseTiling& tiling) {
  Integer exponent = 0;
  for (const auto& b : induced_rows(tiling))
    for (const auto& d : annotate(b)) exponent += d.exponent;
  return q_power(exponent);
}

QPoly full_sum(int n, int k) {
  QPoly total;
  for_each_full_staircase(n, k, [&](const FullStaircaseTiling& t) {
    total += full_weight(t);
    return true;
  });
  return total;
}

ClassReport class_check(int n, int k) {
  ClassReport report;
  report.n = n;
  report.k = k;
  const QPoly untiled = q_fib_factorial(static_cast<unsigned>(k)) * q_fib_factorial(static_cast<unsigned>(n - k));
  const Integer class_size = evaluate(untiled, 1);

  std::map<std::string, std::size_t> slot_of;
  for_each_staircase(n, k, [&](const StaircaseTiling& t) {
    StaircaseClass cls;
    cls.path = path_string(t);
    cls.key = encode(t);
    cls.expected = staircase_weight(t) * untiled;
    slot_of.emplace(cls.key, report.classes.size());
    report.classes.push_back(std::move(cls));
    return true;
  });

  for_each_full_staircase(n, k, [&](const FullStaircaseTiling& full) {
    ++report.full_total;
    StaircaseTiling restricted;
    restricted.n = n;
    restricted.k = k;
    int r = 1;
    for (const auto& b : induced_rows(full)) {
      StaircaseRow row;
      row.row = r++;
      row.length = b.n;
      row.point = b.k;
      row.step = b.kind;
      row.tiled = b.kind == BarrierKind::I ? b.left : b.right;
      restricted.rows.push_back(std::move(row));
    }
    const auto it = slot_of.find(encode(restricted));
    if (it == slot_of.end())
      throw ClassMismatch("class_check: full tiling " + encode(full) + " restricts to no member of S(n,k)");
    auto& cls = report.classes[it->second];
    ++cls.size;
    cls.weight_sum += full_weight(full);
    return true;
  });

  for (const auto& cls : report.classes) {
    if (cls.size != class_size || cls.weight_sum != cls.expected)
      throw ClassMismatch("class_check: class of " + cls.key + " has " + cls.size.get_str() + " members and weight " +
                          to_string(cls.weight_sum) + ", expected " + class_size.get_str() + " and " +
                          to_string(cls.expected));
  }
  return report;
}

std::string encode(const StaircaseTiling& tiling) {
  std::ostringstream out;
  out << "k=" << tiling.k << " path=" << path_string(tiling) << " rows=[";
  for (std::size_t i = 0; i < tiling.rows.size(); ++i) out << (i ? "|" : "") << encode(tiling.rows[i].tiled);
  out << "]";
  return out.str();
}

std::string encode(const FullStaircaseTiling& tiling) {
  std::ostringstream out;
  out << "k=" << tiling.k << " rows=[";
  for (std::size_t i = 0; i < tiling.rows.size(); ++i) out << (i ? "|" : "") << encode(tiling.rows[i]);
  out << "]";
  return out.str();
}

}  // namespace fibonomial
