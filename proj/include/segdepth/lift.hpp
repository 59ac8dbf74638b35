#pragma once

#include "segdepth/points.hpp"

namespace segdepth {

/// (x, y, x^2 + y^2): the point's image on the unit paraboloid.
SpatialPoint lift_point(const PlanarPoint& p);

/// A planar set together with its paraboloid image, index for index.
struct LiftedSet {
  PointSet source;  // 2D
  PointSet lifted;  // 3D, lifted[i] is source[i] lifted
};

/// Throws GeomError(bad_input) unless `set` is 2D.
///
/// A cocircular quadruple (and only a quadruple on a common circle or a
/// common line) lifts to a coplanar quadruple, so a general-position planar
/// set always lifts to a general-position spatial set; the converse fails
/// only for sets with a collinear triple whose line carries no fourth point.
LiftedSet lift_set(const PointSet& set);

struct SideCounts {
  int inside = 0;
  int outside = 0;
};

/// Points of the set other than p,q,r strictly inside / strictly outside the
/// circle through p,q,r. inside + outside = n-3 in general position. Throws
/// degenerate-circle when p,q,r are collinear, degenerate-position when some
/// fourth point is cocircular with them.
SideCounts circle_side_counts(const PointSet& set, int p, int q, int r);

}  // namespace segdepth
