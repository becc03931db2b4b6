#pragma once

// q-Fibonomial tiling models.
//
// Coordinate model: partition tilings of the m x n grid with last-domino
// columns. Cell (i, j) is column i from the left, row j from the bottom; part
// lambda_r occupies row m+1-r from the left, complement part j occupies
// column n+1-j from the bottom. A domino is anchored at its last-covered cell
// (i, j) and weighs q^{F_i F_j}; the top domino of a column (the special one)
// weighs q^{F_{i+1} F_j}.
//
// Staircase model: rows r = 1..n have n-r cells. A path starts at abscissa k
// below row 1; in row r with point p and length l it takes an I step (p
// stays, left compartment 1..p tiled) or an L step (p drops by one, special
// domino on p, p+1 and right compartment p+2..l tiled). When p = l+1 the row
// cannot hold the special domino and the step is a forced boundary L with
// nothing to tile. Row weights are the barrier weights of (l, p).

#include <functional>
#include <string>
#include <vector>

#include "fibonomial/barrier.hpp"
#include "fibonomial/tilings.hpp"

namespace fibonomial {

QPoly coord_weight(const PartitionTiling& tiling);
QPoly coord_partition_sum(int m, int n);

struct StaircaseRow {
  int row = 0;     ///< 1-based, from the bottom
  int length = 0;  ///< n - row
  int point = 0;   ///< barrier point p_row
  BarrierKind step = BarrierKind::I;
  /// I: left compartment (cells 1..p). L: right compartment (cells p+2..l),
  /// the special domino is implied. Boundary L: empty strip.
  StripTiling tiled;

  bool boundary() const { return step == BarrierKind::L && point == length + 1; }
};

struct StaircaseTiling {
  int n = 0;
  int k = 0;
  std::vector<StaircaseRow> rows;  ///< rows 1..n
};

/// "ILL..." with one letter per row, bottom row first.
std::string path_string(const StaircaseTiling& tiling);

void for_each_staircase(int n, int k, const std::function<bool(const StaircaseTiling&)>& visit);
std::vector<StaircaseTiling> enum_staircase(int n, int k);
std::vector<AnnotatedDomino> annotate(const StaircaseRow& row);
QPoly staircase_weight(const StaircaseTiling& tiling);
QPoly staircase_sum(int n, int k);

/// Every row fully tiled; rows[r-1] tiles row r, for r = 1..n (row n is empty).
struct FullStaircaseTiling {
  int n = 0;
  int k = 0;
  std::vector<StripTiling> rows;
};

/// Per-row barrier view of a full tiling along its induced path: L where the
/// point is forced (p = l+1) or a domino covers p, p+1; I otherwise.
std::vector<BarrierTiling> induced_rows(const FullStaircaseTiling& tiling);
std::string induced_path(const FullStaircaseTiling& tiling);

void for_each_full_staircase(int n, int k, const std::function<bool(const FullStaircaseTiling&)>& visit);
std::vector<FullStaircaseTiling> enum_staircase_full(int n, int k);
QPoly full_weight(const FullStaircaseTiling& tiling);
QPoly full_sum(int n, int k);

struct StaircaseClass {
  std::string path;
  std::string key;      ///< encoding of the S(n,k) member
  Integer size = 0;     ///< number of full tilings extending it
  QPoly weight_sum;     ///< summed full weights of the class
  QPoly expected;       ///< staircase_weight * [F_k]! [F_{n-k}]!
};

struct ClassReport {
  int n = 0;
  int k = 0;
  Integer full_total = 0;
  std::vector<StaircaseClass> classes;  ///< one per member of S(n,k), enumeration order
};

/// Sorts S(n) into classes by the S(n,k) member each full tiling restricts
/// to and checks each class weight. Throws ClassMismatch with a witness.
ClassReport class_check(int n, int k);

std::string encode(const StaircaseTiling& tiling);
std::string encode(const FullStaircaseTiling& tiling);

}  // namespace fibonomial
