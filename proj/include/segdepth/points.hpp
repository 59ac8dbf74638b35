#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "segdepth/rational.hpp"

namespace segdepth {

struct PlanarPoint {
  Rat x, y;
};

struct SpatialPoint {
  Rat x, y, z;
};

/// Result of a general-position check. `witness` holds the indices of the
/// first offending triple/quadruple (lexicographic order) when degenerate.
struct PositionCheck {
  bool general = false;
  std::vector<int> witness;
};

/// Indexed set of 2D or 3D points with exact rational coordinates.
///
/// Immutable after construction. Alongside the rational coordinates the set
/// keeps an integer view (all coordinates multiplied by the common
/// denominator): predicate signs are invariant under that uniform positive
/// scaling, so the predicates run on integers. When every scaled coordinate
/// is small enough that the worst-case predicate determinant fits in
/// __int128, an int64 copy is kept and the predicates take the fast path.
class PointSet {
 public:
  static PointSet planar(std::vector<PlanarPoint> pts);
  static PointSet spatial(std::vector<SpatialPoint> pts);
  /// coords is row-major, dim*n entries.
  static PointSet from_coords(int dimension, std::vector<Rat> coords);

  int dimension() const { return dim_; }
  int size() const { return n_; }

  const Rat& coord(int i, int axis) const { return coords_[i * dim_ + axis]; }
  PlanarPoint planar_at(int i) const;
  SpatialPoint spatial_at(int i) const;

  /// Integer view (coordinates scaled by the common denominator).
  const Int& scaled(int i, int axis) const { return icoords_[i * dim_ + axis]; }
  bool fast() const { return fast_; }
  const std::int64_t* fast_row(int i) const { return fcoords_.data() + i * dim_; }

  /// 2D: first collinear triple or cocircular quadruple; 3D: first coplanar
  /// quadruple. Computed once, cached; concurrent callers race benignly.
  const PositionCheck& position_check() const;
  /// Throws GeomError(degenerate_position) with the witness when degenerate.
  void require_general_position() const;

 private:
  PointSet(int dim, std::vector<Rat> coords);
  void build_integer_view();

  int dim_ = 0;
  int n_ = 0;
  std::vector<Rat> coords_;
  std::vector<Int> icoords_;
  std::vector<std::int64_t> fcoords_;
  bool fast_ = false;

  struct Cache {
    std::once_flag once;
    PositionCheck check;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Internal: the uncached general-position scan (defined with the predicates).
PositionCheck detail_run_position_check(const PointSet& s);

}  // namespace segdepth
