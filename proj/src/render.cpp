#include "fibonomial/render.hpp"

#include <sstream>
#include <vector>

namespace fibonomial {

namespace {

const std::string kMono = "• ";
const std::string kLeft = "──";
const std::string kRight = "─ ";
const std::string kVertical = "│ ";
const std::string kUntiled = "· ";
const std::string kBarrier = "‖ ";

// Glyphs for cells first..last of a horizontal strip.
std::vector<std::string> row_glyphs(const StripTiling& t, int first, int last) {
  std::vector<std::string> cells(static_cast<std::size_t>(last - first + 1), kUntiled);
  auto put = [&](int cell, const std::string& g) {
    if (cell >= first && cell <= last) cells[static_cast<std::size_t>(cell - first)] = g;
  };
  for (const Tile& tile : t.tiles) {
    switch (tile.kind) {
      case TileKind::Monomino: put(tile.start, kMono); break;
      case TileKind::Domino:
        put(tile.start, kLeft);
        put(tile.start + 1, kRight);
        break;
      case TileKind::CircularDomino:
        put(tile.start, kRight);
        put(t.offset + 1, kLeft);
        break;
      case TileKind::Empty: break;
    }
  }
  return cells;
}

std::string join(const std::vector<std::string>& cells) {
  std::string out;
  for (const auto& c : cells) out += c;
  return out;
}

// Row of length l with barrier glyph inserted after cell p.
std::string barrier_row(std::vector<std::string> cells, int p) {
  cells.insert(cells.begin() + p, kBarrier);
  return join(cells);
}

}  // namespace

std::string render(const StripTiling& t) {
  if (t.length == 0) return "(empty)\n";
  std::string out = join(row_glyphs(t, t.first_cell(), t.last_cell()));
  for (const Tile& tile : t.tiles)
    if (tile.kind == TileKind::CircularDomino) out += " (wraps)";
  return out + "\n";
}

std::string render(const PartitionTiling& t) {
  const int m = t.lambda.rows();
  const int n = t.lambda.cols();
  // grid[j-1][c-1] = cell (c, j); printed top row first.
  std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(m),
                                             std::vector<std::string>(static_cast<std::size_t>(n), kUntiled));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto cells = row_glyphs(t.rows[r], 1, t.rows[r].length);
    for (std::size_t c = 0; c < cells.size(); ++c) grid[static_cast<std::size_t>(m) - 1 - r][c] = cells[c];
  }
  for (std::size_t idx = 0; idx < t.cols.size(); ++idx) {
    const std::size_t c = static_cast<std::size_t>(n) - 1 - idx;
    for (const Tile& tile : t.cols[idx].tiles) {
      if (tile.kind == TileKind::Monomino) grid[static_cast<std::size_t>(tile.start - 1)][c] = kMono;
      if (tile.kind == TileKind::Domino || tile.kind == TileKind::CircularDomino) {
        const int top = tile.kind == TileKind::Domino ? tile.start + 1 : 1;
        grid[static_cast<std::size_t>(tile.start - 1)][c] = kVertical;
        grid[static_cast<std::size_t>(top - 1)][c] = kVertical;
      }
    }
  }
  std::ostringstream out;
  out << "lambda=(";
  for (std::size_t i = 0; i < t.lambda.parts().size(); ++i) out << (i ? "," : "") << t.lambda.parts()[i];
  out << ")\n";
  for (int j = m; j >= 1; --j) out << join(grid[static_cast<std::size_t>(j - 1)]) << "\n";
  return out.str();
}

std::string render(const TilingGraph& g) {
  std::vector<bool> linked(static_cast<std::size_t>(g.n) + 1, false);
  bool wrap = false;
  for (const auto& [a, b] : g.edges) {
    if (b == a + 1) linked[static_cast<std::size_t>(a)] = true;
    else wrap = true;
  }
  std::string out;
  for (int v = 1; v <= g.n; ++v) {
    out += "o";
    if (v < g.n) out += linked[static_cast<std::size_t>(v)] ? "──" : "  ";
  }
  if (wrap) out += "  (edge v" + std::to_string(g.n) + "-v1)";
  return out + "\n";
}

std::string render(const BarrierTiling& t) {
  std::vector<std::string> cells(static_cast<std::size_t>(t.n), kUntiled);
  auto copy = [&](const StripTiling& s) {
    if (s.length == 0) return;
    const auto g = row_glyphs(s, s.first_cell(), s.last_cell());
    for (std::size_t i = 0; i < g.size(); ++i) cells[static_cast<std::size_t>(s.offset) + i] = g[i];
  };
  copy(t.left);
  copy(t.right);
  if (t.has_special()) {
    cells[static_cast<std::size_t>(t.k - 1)] = kLeft;
    cells[static_cast<std::size_t>(t.k)] = kRight;
  }
  const int bar = t.kind == BarrierKind::I ? t.k : t.k - 1;
  return std::string(to_string(t.kind)) + " k=" + std::to_string(t.k) + "  " + barrier_row(cells, bar) + "\n";
}

std::string render(const StaircaseTiling& t) {
  std::ostringstream out;
  out << "path " << path_string(t) << "\n";
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
    const StaircaseRow& row = *it;
    std::vector<std::string> cells(static_cast<std::size_t>(row.length), kUntiled);
    if (row.tiled.length > 0) {
      const auto g = row_glyphs(row.tiled, row.tiled.first_cell(), row.tiled.last_cell());
      for (std::size_t i = 0; i < g.size(); ++i) cells[static_cast<std::size_t>(row.tiled.offset) + i] = g[i];
    }
    if (row.step == BarrierKind::L && !row.boundary()) {
      cells[static_cast<std::size_t>(row.point - 1)] = kLeft;
      cells[static_cast<std::size_t>(row.point)] = kRight;
    }
    const int bar = row.step == BarrierKind::I ? row.point : row.point - 1;
    out << to_string(row.step) << " " << barrier_row(cells, bar) << "\n";
  }
  return out.str();
}

std::string render(const FullStaircaseTiling& t) {
  std::ostringstream out;
  out << "path " << induced_path(t) << "\n";
  const auto induced = induced_rows(t);
  for (int r = t.n; r >= 1; --r) {
    const auto& row = t.rows[static_cast<std::size_t>(r - 1)];
    const auto& b = induced[static_cast<std::size_t>(r - 1)];
    auto cells = row.length > 0 ? row_glyphs(row, 1, row.length) : std::vector<std::string>{};
    const int bar = b.kind == BarrierKind::I ? b.k : b.k - 1;
    out << to_string(b.kind) << " " << barrier_row(cells, bar) << "\n";
  }
  return out.str();
}

}  // namespace fibonomial
