#include "fibonomial/graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fibonomial {

namespace {

std::string edge_text(const std::pair<int, int>& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

bool is_wrap(const TilingGraph& g, const std::pair<int, int>& e) {
  return g.mode == Mode::Circular && g.n >= 2 && e.first == g.n && e.second == 1;
}

}  // namespace

void validate(const TilingGraph& g) {
  if (g.n < 1) throw InvalidGraph("tiling graph needs at least one vertex");
  std::vector<int> degree(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& e : g.edges) {
    const bool in_range = e.first >= 1 && e.first <= g.n && e.second >= 1 && e.second <= g.n;
    if (!in_range) throw InvalidGraph("edge " + edge_text(e) + " names a missing vertex");
    if (e.second != e.first + 1 && !is_wrap(g, e))
      throw InvalidGraph("edge " + edge_text(e) + " does not join consecutive vertices");
    for (int v : {e.first, e.second}) {
      if (++degree[static_cast<std::size_t>(v)] > 1)
        throw InvalidGraph("vertex v" + std::to_string(v) + " has degree greater than 1");
    }
  }
}

TilingGraph tiling_to_graph(const StripTiling& tiling, Mode mode) {
  TilingGraph g;
  g.n = tiling.length;
  g.mode = mode;
  for (const Tile& tile : tiling.tiles) {
    const int cell = tile.start - tiling.offset;
    switch (tile.kind) {
      case TileKind::Empty: throw std::invalid_argument("tiling_to_graph: empty tiling has no graph");
      case TileKind::Monomino: break;
      case TileKind::Domino: g.edges.emplace_back(cell, cell + 1); break;
      case TileKind::CircularDomino: g.edges.emplace_back(g.n, 1); break;
    }
  }
  validate(g);
  return g;
}

StripTiling graph_to_tiling(const TilingGraph& g) {
  validate(g);
  std::vector<int> partner(static_cast<std::size_t>(g.n) + 2, 0);
  bool wrap = false;
  for (const auto& e : g.edges) {
    if (is_wrap(g, e)) {
      wrap = true;
      continue;
    }
    partner[static_cast<std::size_t>(e.first)] = e.second;
  }
  StripTiling t;
  t.length = g.n;
  int cell = wrap ? 2 : 1;
  const int last = wrap ? g.n - 1 : g.n;
  while (cell <= last) {
    if (partner[static_cast<std::size_t>(cell)] == cell + 1) {
      t.tiles.push_back({TileKind::Domino, cell});
      cell += 2;
    } else {
      t.tiles.push_back({TileKind::Monomino, cell});
      ++cell;
    }
  }
  if (wrap) t.tiles.push_back({TileKind::CircularDomino, g.n});
  return t;
}

void for_each_tiling_graph(int n, Mode mode, const std::function<bool(const TilingGraph&)>& visit) {
  if (n < 1) throw std::invalid_argument("enum_tiling_graphs: n must be positive");
  TilingGraph g;
  g.n = n;
  g.mode = mode;
  // Matchings on the path v_v..v_last, isolated branch first; `wrap` appends
  // the edge (n, 1) at the leaves so edges stay sorted by first vertex.
  std::function<bool(int, int, bool)> rec = [&](int v, int last, bool wrap) {
    if (v > last) {
      if (!wrap) return visit(g);
      g.edges.emplace_back(n, 1);
      const bool go_on = visit(g);
      g.edges.pop_back();
      return go_on;
    }
    if (!rec(v + 1, last, wrap)) return false;
    if (v + 1 <= last) {
      g.edges.emplace_back(v, v + 1);
      const bool go_on = rec(v + 2, last, wrap);
      g.edges.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  if (!rec(1, n, false)) return;
  if (mode == Mode::Circular && n >= 2) rec(2, n - 1, true);
}

std::vector<TilingGraph> enum_tiling_graphs(int n, Mode mode) {
  std::vector<TilingGraph> out;
  for_each_tiling_graph(n, mode, [&](const TilingGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

IntPoly2 graph_weight(const TilingGraph& g) {
  const auto edges = static_cast<std::uint32_t>(g.edges.size());
  const auto isolated = static_cast<std::uint32_t>(g.n) - 2 * edges;
  return st_monomial(isolated, edges);
}

}  // namespace fibonomial
