#pragma once

// Strip tilings by monominos and dominos, Ferrers-diagram partitions inside
// an m x n box, and partition tilings (rows of lambda times columns of its
// complement), together with their weights.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fibonomial/exactpoly.hpp"

namespace fibonomial {

enum class TileKind { Monomino, Domino, CircularDomino, Empty };
enum class Mode { Linear, Circular };
enum class Restriction { None, FirstDomino, FirstMonomino, LastDomino };

/// A tile placed on a strip. `start` is the absolute 1-based cell index; a
/// domino covers start and start+1, a circular domino covers the last and
/// the first cell of its strip.
struct Tile {
  TileKind kind = TileKind::Monomino;
  int start = 1;

  friend bool operator==(const Tile&, const Tile&) = default;
};

/// Tiling of cells offset+1 .. offset+length. A zero-length strip carries a
/// single Empty tile.
struct StripTiling {
  int length = 0;
  int offset = 0;
  std::vector<Tile> tiles;

  int first_cell() const { return offset + 1; }
  int last_cell() const { return offset + length; }
  std::size_t domino_count() const;
  std::size_t monomino_count() const;

  friend bool operator==(const StripTiling&, const StripTiling&) = default;
};

/// Weakly decreasing sequence of `rows` parts, each at most `cols`.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if the parts do not fit the box or increase.
  Partition(std::vector<int> parts, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int cols() const { return cols_; }
  int size() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int cols_ = 0;
};

/// lambda plus one strip tiling per part of lambda (rows) and per part of the
/// complement (columns). Row i tiles lambda_i; column j tiles complement_j.
struct PartitionTiling {
  Partition lambda;
  Partition complement;
  std::vector<StripTiling> rows;
  std::vector<StripTiling> cols;
};

using StripVisitor = std::function<bool(const StripTiling&)>;
using PartitionTilingVisitor = std::function<bool(const PartitionTiling&)>;

/// Visits every tiling of a 1 x n strip once in a fixed order; the visitor
/// returns false to stop early. Circular mode admits only Restriction::None.
void for_each_strip(int n, Mode mode, Restriction restriction, const StripVisitor& visit);
std::vector<StripTiling> enum_strip(int n, Mode mode, Restriction restriction = Restriction::None);

/// s^(#monominos) t^(#dominos); the Empty tile weighs 1 (linear) or 2 (circular).
IntPoly2 strip_weight_st(const StripTiling& tiling, Mode mode);
/// Product of q^{F_i} over dominos whose right cell is i.
QPoly strip_weight_qfib(const StripTiling& tiling);

/// All C(m+n, m) partitions inside the m x n box, lexicographic on parts.
std::vector<Partition> enum_partitions(int m, int n);
/// lambda*_c = m - #{i : lambda_i >= c}, listed weakly decreasing, in the n x m box.
Partition complement(const Partition& lambda);
int null_count(const Partition& lambda);

/// Cartesian product of per-part tilings, over every partition in the box.
void for_each_partition_tiling(int m, int n, Mode mode, Restriction row_restriction,
                               Restriction col_restriction, const PartitionTilingVisitor& visit);
/// Same, for one fixed partition.
void for_each_partition_tiling(const Partition& lambda, Mode mode, Restriction row_restriction,
                               Restriction col_restriction, const PartitionTilingVisitor& visit);
std::vector<PartitionTiling> enum_partition_tilings(int m, int n, Mode mode, Restriction row_restriction,
                                                    Restriction col_restriction);

IntPoly2 partition_weight_st(const PartitionTiling& tiling, Mode mode);

/// Linear: rows unrestricted, columns first-domino. Circular: both circular.
IntPoly2 sagan_savage_sum(int m, int n, Mode mode);

enum class FibonomialVariant { Unrestricted, Monomino };

/// Unrestricted: sum_lambda F_{N(l*)+1} F_{N(l*)+2} |L_l x L_l*|.
/// Monomino:     sum_lambda F_{N(l*)+1} |L_l x L''_l*| (first tile of each column a monomino).
Integer modified_fibonomial_count(int m, int n, FibonomialVariant variant);

struct ExtensionClass {
  std::string key;       ///< canonical encoding of the unrestricted m x n tiling
  int null_parts = 0;    ///< i = N(lambda*)
  Integer size = 0;      ///< number of restricted (m+2) x n tilings mapped onto it
  Integer expected = 0;  ///< F_{i+1} F_{i+2}
};

struct ExtensionReport {
  int m = 0;
  int n = 0;
  Integer restricted_total = 0;
  std::vector<ExtensionClass> classes;  ///< one per unrestricted tiling, enumeration order
};

/// Maps each first-domino restricted tiling of (m+2) x n onto the
/// unrestricted m x n tiling left after deleting the two bottom rows, and
/// checks that every class has F_{i+1} F_{i+2} members.
/// Throws ClassSizeMismatch naming a witness tiling on failure.
ExtensionReport extension_classes(int m, int n);

/// Canonical one-line encoding, e.g. "lambda=(2,1) rows=[d1|m1] cols=[-|m1]".
std::string encode(const PartitionTiling& tiling);
std::string encode(const StripTiling& tiling);

const char* to_string(TileKind kind);
const char* to_string(Mode mode);
const char* to_string(Restriction restriction);

}  // namespace fibonomial
