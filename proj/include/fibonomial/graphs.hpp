#pragma once

// Tiling graphs: a strip tiling of 1 x n read as a graph on v_1..v_n where
// monominos are isolated vertices and dominos are edges.

#include <functional>
#include <utility>
#include <vector>

#include "fibonomial/tilings.hpp"

namespace fibonomial {

/// Edges are oriented (u, successor of u): (i, i+1) for a domino on cells
/// i, i+1 and (n, 1) for the wrap edge of a circular domino. The orientation
/// keeps the two length-2 circular dominos apart.
struct TilingGraph {
  int n = 0;
  Mode mode = Mode::Linear;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const TilingGraph&, const TilingGraph&) = default;
};

/// Throws InvalidGraph on a vertex of degree 2, an edge that is not a
/// consecutive pair, or a wrap edge outside circular mode.
void validate(const TilingGraph& g);

/// Throws std::invalid_argument on an Empty tiling.
TilingGraph tiling_to_graph(const StripTiling& tiling, Mode mode);
StripTiling graph_to_tiling(const TilingGraph& g);

/// Enumerates graphs directly (not through strip tilings): for circular
/// mode, graphs without the wrap edge come first.
void for_each_tiling_graph(int n, Mode mode, const std::function<bool(const TilingGraph&)>& visit);
std::vector<TilingGraph> enum_tiling_graphs(int n, Mode mode);

/// s per isolated vertex, t per edge.
IntPoly2 graph_weight(const TilingGraph& g);

}  // namespace fibonomial
