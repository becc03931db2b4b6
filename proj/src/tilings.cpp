#include "fibonomial/tilings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fibonomial/sequences.hpp"

namespace fibonomial {

std::size_t StripTiling::domino_count() const {
  return static_cast<std::size_t>(std::count_if(tiles.begin(), tiles.end(), [](const Tile& t) {
    return t.kind == TileKind::Domino || t.kind == TileKind::CircularDomino;
  }));
}

std::size_t StripTiling::monomino_count() const {
  return static_cast<std::size_t>(
      std::count_if(tiles.begin(), tiles.end(), [](const Tile& t) { return t.kind == TileKind::Monomino; }));
}

Partition::Partition(std::vector<int> parts, int cols) : parts_(std::move(parts)), cols_(cols) {
  if (cols_ < 0) throw std::invalid_argument("Partition: negative box width");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || parts_[i] > cols_) throw std::invalid_argument("Partition: part outside the box");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

namespace {

using TileSink = std::function<bool(std::vector<Tile>&)>;

// Linear tilings of cells first..last, monomino branch before domino branch.
bool linear_tiles(int cell, int last, std::vector<Tile>& acc, const TileSink& sink) {
  if (cell > last) return sink(acc);
  acc.push_back({TileKind::Monomino, cell});
  if (!linear_tiles(cell + 1, last, acc, sink)) return false;
  acc.pop_back();
  if (cell + 1 <= last) {
    acc.push_back({TileKind::Domino, cell});
    if (!linear_tiles(cell + 2, last, acc, sink)) return false;
    acc.pop_back();
  }
  return true;
}

}  // namespace

void for_each_strip(int n, Mode mode, Restriction restriction, const StripVisitor& visit) {
  if (n < 0) throw std::invalid_argument("for_each_strip: negative length");
  if (mode == Mode::Circular && restriction != Restriction::None)
    throw std::invalid_argument("for_each_strip: circular tilings take no restriction");

  StripTiling tiling;
  tiling.length = n;
  if (n == 0) {
    tiling.tiles = {{TileKind::Empty, 1}};
    visit(tiling);
    return;
  }

  std::vector<Tile> acc;
  auto emit = [&](std::vector<Tile>& tiles) {
    tiling.tiles = tiles;
    return visit(tiling);
  };

  switch (restriction) {
    case Restriction::None: {
      if (!linear_tiles(1, n, acc, emit)) return;
      if (mode == Mode::Circular && n >= 2) {
        linear_tiles(2, n - 1, acc, [&](std::vector<Tile>& tiles) {
          tiles.push_back({TileKind::CircularDomino, n});
          const bool go_on = emit(tiles);
          tiles.pop_back();
          return go_on;
        });
      }
      return;
    }
    case Restriction::FirstDomino:
      if (n < 2) return;
      acc.push_back({TileKind::Domino, 1});
      linear_tiles(3, n, acc, emit);
      return;
    case Restriction::FirstMonomino:
      acc.push_back({TileKind::Monomino, 1});
      linear_tiles(2, n, acc, emit);
      return;
    case Restriction::LastDomino:
      if (n < 2) return;
      linear_tiles(1, n - 2, acc, [&](std::vector<Tile>& tiles) {
        tiles.push_back({TileKind::Domino, n - 1});
        const bool go_on = emit(tiles);
        tiles.pop_back();
        return go_on;
      });
      return;
  }
}

std::vector<StripTiling> enum_strip(int n, Mode mode, Restriction restriction) {
  std::vector<StripTiling> out;
  for_each_strip(n, mode, restriction, [&](const StripTiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

IntPoly2 strip_weight_st(const StripTiling& tiling, Mode mode) {
  std::uint32_t monominos = 0;
  std::uint32_t dominos = 0;
  Integer coeff = 1;
  for (const Tile& tile : tiling.tiles) {
    switch (tile.kind) {
      case TileKind::Monomino: ++monominos; break;
      case TileKind::Domino:
      case TileKind::CircularDomino: ++dominos; break;
      case TileKind::Empty:
        if (mode == Mode::Circular) coeff *= 2;
        break;
    }
  }
  return st_monomial(monominos, dominos, coeff);
}

QPoly strip_weight_qfib(const StripTiling& tiling) {
  Integer exponent = 0;
  for (const Tile& tile : tiling.tiles) {
    if (tile.kind == TileKind::CircularDomino)
      throw std::invalid_argument("strip_weight_qfib: circular tilings carry no q-weight");
    if (tile.kind == TileKind::Domino) exponent += fib(static_cast<unsigned>(tile.start + 1 - tiling.offset));
  }
  return q_power(exponent);
}

std::vector<Partition> enum_partitions(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("enum_partitions: negative box");
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(m));
  std::function<void(int, int)> rec = [&](int index, int bound) {
    if (index == m) {
      out.emplace_back(parts, n);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      parts[static_cast<std::size_t>(index)] = v;
      rec(index + 1, v);
    }
  };
  rec(0, n);
  return out;
}

Partition complement(const Partition& lambda) {
  const int m = lambda.rows();
  const int n = lambda.cols();
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (int c = n; c >= 1; --c) {
    const auto reaching = std::count_if(lambda.parts().begin(), lambda.parts().end(), [c](int p) { return p >= c; });
    parts.push_back(m - static_cast<int>(reaching));
  }
  return Partition(std::move(parts), m);
}

int null_count(const Partition& lambda) {
  return static_cast<int>(std::count(lambda.parts().begin(), lambda.parts().end(), 0));
}

void for_each_partition_tiling(const Partition& lambda, Mode mode, Restriction row_restriction,
                               Restriction col_restriction, const PartitionTilingVisitor& visit) {
  if (mode == Mode::Circular && (row_restriction != Restriction::None || col_restriction != Restriction::None))
    throw std::invalid_argument("circular partition tilings take no restriction");

  std::unordered_map<int, std::vector<StripTiling>> row_cache;
  std::unordered_map<int, std::vector<StripTiling>> col_cache;
  auto options = [&](std::unordered_map<int, std::vector<StripTiling>>& cache, int len, Restriction r)
      -> const std::vector<StripTiling>& {
    auto it = cache.find(len);
    if (it == cache.end()) it = cache.emplace(len, enum_strip(len, mode, r)).first;
    return it->second;
  };

  PartitionTiling current;
  current.lambda = lambda;
  current.complement = complement(lambda);

  std::vector<const std::vector<StripTiling>*> slots;
  for (int part : lambda.parts()) slots.push_back(&options(row_cache, part, row_restriction));
  for (int part : current.complement.parts()) slots.push_back(&options(col_cache, part, col_restriction));
  for (const auto* slot : slots)
    if (slot->empty()) return;

  const std::size_t row_count = lambda.parts().size();
  std::vector<std::size_t> index(slots.size(), 0);
  current.rows.resize(row_count);
  current.cols.resize(slots.size() - row_count);
  auto assign = [&](std::size_t slot) {
    const StripTiling& chosen = (*slots[slot])[index[slot]];
    if (slot < row_count) current.rows[slot] = chosen;
    else current.cols[slot - row_count] = chosen;
  };
  for (std::size_t s = 0; s < slots.size(); ++s) assign(s);

  while (true) {
    if (!visit(current)) return;
    // Odometer: the last slot varies fastest.
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++index[s] < slots[s]->size()) {
        assign(s);
        break;
      }
      index[s] = 0;
      assign(s);
      if (s == 0) return;
    }
    if (slots.empty()) return;
  }
}

void for_each_partition_tiling(int m, int n, Mode mode, Restriction row_restriction, Restriction col_restriction,
                               const PartitionTilingVisitor& visit) {
  bool stopped = false;
  for (const Partition& lambda : enum_partitions(m, n)) {
    for_each_partition_tiling(lambda, mode, row_restriction, col_restriction, [&](const PartitionTiling& t) {
      if (!visit(t)) stopped = true;
      return !stopped;
    });
    if (stopped) return;
  }
}

std::vector<PartitionTiling> enum_partition_tilings(int m, int n, Mode mode, Restriction row_restriction,
                                                    Restriction col_restriction) {
  std::vector<PartitionTiling> out;
  for_each_partition_tiling(m, n, mode, row_restriction, col_restriction, [&](const PartitionTiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

IntPoly2 partition_weight_st(const PartitionTiling& tiling, Mode mode) {
  IntPoly2 w(1L);
  for (const auto& row : tiling.rows) w *= strip_weight_st(row, mode);
  for (const auto& col : tiling.cols) w *= strip_weight_st(col, mode);
  return w;
}

IntPoly2 sagan_savage_sum(int m, int n, Mode mode) {
  const Restriction col = mode == Mode::Linear ? Restriction::FirstDomino : Restriction::None;
  IntPoly2 total;
  for_each_partition_tiling(m, n, mode, Restriction::None, col, [&](const PartitionTiling& t) {
    std::uint32_t monominos = 0;
    std::uint32_t dominos = 0;
    Integer coeff = 1;
    auto tally = [&](const StripTiling& strip) {
      monominos += static_cast<std::uint32_t>(strip.monomino_count());
      dominos += static_cast<std::uint32_t>(strip.domino_count());
      if (mode == Mode::Circular && strip.length == 0) coeff *= 2;
    };
    for (const auto& row : t.rows) tally(row);
    for (const auto& c : t.cols) tally(c);
    total.add_term({monominos, dominos}, coeff);
    return true;
  });
  return total;
}

Integer modified_fibonomial_count(int m, int n, FibonomialVariant variant) {
  const Restriction col =
      variant == FibonomialVariant::Unrestricted ? Restriction::None : Restriction::FirstMonomino;
  std::unordered_map<int, Integer> row_counts;
  std::unordered_map<int, Integer> col_counts;
  auto count = [](std::unordered_map<int, Integer>& cache, int len, Restriction r) {
    auto it = cache.find(len);
    if (it != cache.end()) return it->second;
    Integer c = 0;
    for_each_strip(len, Mode::Linear, r, [&](const StripTiling&) {
      ++c;
      return true;
    });
    cache.emplace(len, c);
    return c;
  };

  Integer total = 0;
  for (const Partition& lambda : enum_partitions(m, n)) {
    const Partition comp = complement(lambda);
    const auto i = static_cast<unsigned>(null_count(comp));
    Integer tilings = 1;
    for (int part : lambda.parts()) tilings *= count(row_counts, part, Restriction::None);
    for (int part : comp.parts()) tilings *= count(col_counts, part, col);
    const Integer weight = variant == FibonomialVariant::Unrestricted ? fib(i + 1) * fib(i + 2) : fib(i + 1);
    total += weight * tilings;
  }
  return total;
}

namespace {

// Column j of the (m+2) x n tiling with its bottom two cells removed.
StripTiling drop_bottom_two(const StripTiling& col, const std::string& witness) {
  StripTiling out;
  if (col.length == 0 || col.length == 2) {
    if (col.length == 2 && !(col.tiles.size() == 1 && col.tiles[0].kind == TileKind::Domino))
      throw ClassSizeMismatch("extension_classes: length-2 column is not a single domino in " + witness);
    out.tiles = {{TileKind::Empty, 1}};
    return out;
  }
  if (col.tiles.empty() || col.tiles.front().kind != TileKind::Domino || col.tiles.front().start != 1)
    throw ClassSizeMismatch("extension_classes: column does not open with a domino in " + witness);
  out.length = col.length - 2;
  for (std::size_t i = 1; i < col.tiles.size(); ++i) out.tiles.push_back({col.tiles[i].kind, col.tiles[i].start - 2});
  return out;
}

}  // namespace

ExtensionReport extension_classes(int m, int n) {
  ExtensionReport report;
  report.m = m;
  report.n = n;

  std::unordered_map<std::string, std::size_t> slot_of;
  for_each_partition_tiling(m, n, Mode::Linear, Restriction::None, Restriction::None, [&](const PartitionTiling& t) {
    ExtensionClass cls;
    cls.key = encode(t);
    cls.null_parts = null_count(t.complement);
    const auto i = static_cast<unsigned>(cls.null_parts);
    cls.expected = fib(i + 1) * fib(i + 2);
    slot_of.emplace(cls.key, report.classes.size());
    report.classes.push_back(std::move(cls));
    return true;
  });

  for_each_partition_tiling(
      m + 2, n, Mode::Linear, Restriction::None, Restriction::FirstDomino, [&](const PartitionTiling& big) {
        ++report.restricted_total;
        const std::string witness = encode(big);
        std::vector<int> parts(big.lambda.parts().begin(), big.lambda.parts().begin() + m);
        PartitionTiling small;
        small.lambda = Partition(std::move(parts), n);
        small.complement = complement(small.lambda);
        small.rows.assign(big.rows.begin(), big.rows.begin() + m);
        for (std::size_t j = 0; j < big.cols.size(); ++j) {
          StripTiling col = drop_bottom_two(big.cols[j], witness);
          if (col.length != small.complement.parts()[j])
            throw ClassSizeMismatch("extension_classes: column length mismatch in " + witness);
          small.cols.push_back(std::move(col));
        }
        const auto it = slot_of.find(encode(small));
        if (it == slot_of.end())
          throw ClassSizeMismatch("extension_classes: " + witness + " maps outside the unrestricted tilings");
        ++report.classes[it->second].size;
        return true;
      });

  for (const auto& cls : report.classes) {
    if (cls.size != cls.expected)
      throw ClassSizeMismatch("extension_classes: class of " + cls.key + " has " + cls.size.get_str() +
                              " members, expected " + cls.expected.get_str());
  }
  return report;
}

std::string encode(const StripTiling& tiling) {
  std::ostringstream out;
  bool first = true;
  for (const Tile& tile : tiling.tiles) {
    if (!first) out << ',';
    first = false;
    switch (tile.kind) {
      case TileKind::Monomino: out << 'm' << tile.start; break;
      case TileKind::Domino: out << 'd' << tile.start; break;
      case TileKind::CircularDomino: out << 'c' << tile.start; break;
      case TileKind::Empty: out << '-'; break;
    }
  }
  return out.str();
}

std::string encode(const PartitionTiling& tiling) {
  std::ostringstream out;
  out << "lambda=(";
  for (std::size_t i = 0; i < tiling.lambda.parts().size(); ++i)
    out << (i ? "," : "") << tiling.lambda.parts()[i];
  out << ") rows=[";
  for (std::size_t i = 0; i < tiling.rows.size(); ++i) out << (i ? "|" : "") << encode(tiling.rows[i]);
  out << "] cols=[";
  for (std::size_t i = 0; i < tiling.cols.size(); ++i) out << (i ? "|" : "") << encode(tiling.cols[i]);
  out << "]";
  return out.str();
}

const char* to_string(TileKind kind) {
  switch (kind) {
    case TileKind::Monomino: return "monomino";
    case TileKind::Domino: return "domino";
    case TileKind::CircularDomino: return "circular_domino";
    case TileKind::Empty: return "empty";
  }
  return "?";
}

const char* to_string(Mode mode) { return mode == Mode::Linear ? "linear" : "circular"; }

const char* to_string(Restriction restriction) {
  switch (restriction) {
    case Restriction::None: return "none";
    case Restriction::FirstDomino: return "first-domino";
    case Restriction::FirstMonomino: return "first-monomino";
    case Restriction::LastDomino: return "last-domino";
  }
  return "?";
}

}  // namespace fibonomial
