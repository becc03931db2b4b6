#pragma once

// Barrier tilings of a 1 x n strip with barrier point k.
//
// An I barrier splits the strip into a left compartment (cells 1..k) and a
// right compartment (cells k+1..n). An L barrier places a special domino on
// cells k, k+1; the left compartment is 1..k-1 and the right one k+2..n.
//
// Domino weights use the floor f and height h of each domino:
//   left of I       q^{F_f F_h}, f = right cell,        h = n-k+1
//   right of I      q^{F_f},     f = n+1 - left cell
//   left of L       q^{F_f},     f = right cell
//   special (L)     q^{F_f F_{h+1}}, f = n-k+1,         h = k
//   right of L      q^{F_f F_h}, f = n+1 - left cell,   h = k
//
// The staircase model also uses a boundary L with k = n+1: the whole row is
// the left compartment of an L and there is no special domino.

#include <functional>
#include <optional>
#include <vector>

#include "fibonomial/tilings.hpp"

namespace fibonomial {

enum class BarrierKind { I, L };
enum class Side { Left, Special, Right };

struct DominoGeometry {
  int floor = 0;
  int height = 0;
};

struct AnnotatedDomino {
  int start = 0;  ///< left (lower) cell, absolute
  Side side = Side::Left;
  DominoGeometry geometry;
  Integer exponent = 0;  ///< the domino weighs q^exponent
};

struct BarrierTiling {
  int n = 0;
  int k = 0;
  BarrierKind kind = BarrierKind::I;
  StripTiling left;   ///< offset 0
  StripTiling right;  ///< offset k (I) or k+1 (L)

  bool has_special() const { return kind == BarrierKind::L && k >= 1 && k <= n - 1; }
};

/// Exponents for the dominos of one compartment of a row of length n with
/// barrier point k. Tile starts in `tiles` are absolute cells.
std::vector<AnnotatedDomino> annotate_compartment(int n, int k, BarrierKind kind, Side side,
                                                  const StripTiling& tiles);
std::optional<AnnotatedDomino> special_domino(int n, int k, BarrierKind kind);
/// Left compartment, special domino, right compartment, in cell order.
std::vector<AnnotatedDomino> annotate(const BarrierTiling& tiling);
QPoly weight_of(const std::vector<AnnotatedDomino>& dominos);

/// I barriers first, then L barriers (only when 1 <= k <= n-1).
void for_each_barrier(int n, int k, const std::function<bool(const BarrierTiling&)>& visit);
std::vector<BarrierTiling> enum_barrier(int n, int k);

QPoly barrier_weight(const BarrierTiling& tiling);
QPoly barrier_sum(int n, int k);

struct BarrierSplit {
  QPoly i_part;
  QPoly l_part;
};
/// barrier_sum(n, k) split by barrier kind.
BarrierSplit barrier_split(int n, int k);

const char* to_string(BarrierKind kind);
const char* to_string(Side side);

}  // namespace fibonomial
