#include "fibonomial/barrier.hpp"

#include <stdexcept>
#include <string>

#include "fibonomial/sequences.hpp"

namespace fibonomial {

namespace {

void require_point(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("barrier point k=" + std::to_string(k) + " outside 0..n for n=" +
                                std::to_string(n));
}

Integer fib_at(int i) { return fib(static_cast<unsigned>(i)); }

}  // namespace

std::vector<AnnotatedDomino> annotate_compartment(int n, int k, BarrierKind kind, Side side,
                                                  const StripTiling& tiles) {
  std::vector<AnnotatedDomino> out;
  for (const Tile& tile : tiles.tiles) {
    if (tile.kind == TileKind::CircularDomino)
      throw std::invalid_argument("barrier compartments are linear");
    if (tile.kind != TileKind::Domino) continue;
    AnnotatedDomino d;
    d.start = tile.start;
    d.side = side;
    if (side == Side::Left) {
      d.geometry.floor = tile.start + 1;
      d.geometry.height = kind == BarrierKind::I ? n - k + 1 : k;
      d.exponent = fib_at(d.geometry.floor);
      if (kind == BarrierKind::I) d.exponent *= fib_at(d.geometry.height);
    } else {
      d.geometry.floor = n + 1 - tile.start;
      d.geometry.height = kind == BarrierKind::I ? n - k + 1 : k;
      d.exponent = fib_at(d.geometry.floor);
      if (kind == BarrierKind::L) d.exponent *= fib_at(d.geometry.height);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::optional<AnnotatedDomino> special_domino(int n, int k, BarrierKind kind) {
  if (kind != BarrierKind::L || k < 1 || k > n - 1) return std::nullopt;
  AnnotatedDomino d;
  d.start = k;
  d.side = Side::Special;
  d.geometry = {n - k + 1, k};
  d.exponent = fib_at(d.geometry.floor) * fib_at(d.geometry.height + 1);
  return d;
}

std::vector<AnnotatedDomino> annotate(const BarrierTiling& tiling) {
  auto out = annotate_compartment(tiling.n, tiling.k, tiling.kind, Side::Left, tiling.left);
  if (auto special = special_domino(tiling.n, tiling.k, tiling.kind)) out.push_back(*special);
  for (auto& d : annotate_compartment(tiling.n, tiling.k, tiling.kind, Side::Right, tiling.right))
    out.push_back(std::move(d));
  return out;
}

QPoly weight_of(const std::vector<AnnotatedDomino>& dominos) {
  Integer exponent = 0;
  for (const auto& d : dominos) exponent += d.exponent;
  return q_power(exponent);
}

void for_each_barrier(int n, int k, const std::function<bool(const BarrierTiling&)>& visit) {
  require_point(n, k);
  const auto left_tilings = enum_strip(k, Mode::Linear);
  const auto right_tilings = enum_strip(n - k, Mode::Linear);
  BarrierTiling t;
  t.n = n;
  t.k = k;
  t.kind = BarrierKind::I;
  for (const auto& left : left_tilings) {
    t.left = left;
    for (const auto& right : right_tilings) {
      t.right = right;
      t.right.offset = k;
      for (auto& tile : t.right.tiles) tile.start += k;
      if (!visit(t)) return;
    }
  }
  if (k < 1 || k > n - 1) return;
  t.kind = BarrierKind::L;
  const auto l_left = enum_strip(k - 1, Mode::Linear);
  const auto l_right = enum_strip(n - k - 1, Mode::Linear);
  for (const auto& left : l_left) {
    t.left = left;
    for (const auto& right : l_right) {
      t.right = right;
      t.right.offset = k + 1;
      for (auto& tile : t.right.tiles) tile.start += k + 1;
      if (!visit(t)) return;
    }
  }
}

std::vector<BarrierTiling> enum_barrier(int n, int k) {
  std::vector<BarrierTiling> out;
  for_each_barrier(n, k, [&](const BarrierTiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

QPoly barrier_weight(const BarrierTiling& tiling) { return weight_of(annotate(tiling)); }

BarrierSplit barrier_split(int n, int k) {
  BarrierSplit split;
  for_each_barrier(n, k, [&](const BarrierTiling& t) {
    (t.kind == BarrierKind::I ? split.i_part : split.l_part) += barrier_weight(t);
    return true;
  });
  return split;
}

QPoly barrier_sum(int n, int k) {
  BarrierSplit split = barrier_split(n, k);
  return split.i_part + split.l_part;
}

const char* to_string(BarrierKind kind) { return kind == BarrierKind::I ? "I" : "L"; }

const char* to_string(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Special: return "special";
    case Side::Right: return "right";
  }
  return "?";
}

}  // namespace fibonomial
