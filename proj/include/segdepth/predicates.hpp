#pragma once

#include "segdepth/points.hpp"

namespace segdepth {

/// Sign of det(b-a, c-a). +1 means (a,b,c) is counterclockwise.
int orient2d(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c);

/// Sign of det(b-a, c-a, d-a). +1 means d is on the positive side of the
/// oriented plane (a,b,c); the convention is anchored by
/// orient3d((0,0,0),(1,0,0),(0,1,0),(0,0,1)) = +1.
int orient3d(const SpatialPoint& a, const SpatialPoint& b, const SpatialPoint& c,
             const SpatialPoint& d);

/// +1 iff d is strictly inside the circle through a,b,c, -1 strictly outside,
/// 0 cocircular. Normalized: the answer does not depend on the orientation of
/// (a,b,c). Throws GeomError(degenerate_circle) when a,b,c are collinear.
int incircle(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c,
             const PlanarPoint& d);

// Index-based variants running on the set's integer view.
int orient2d(const PointSet& s, int a, int b, int c);
int orient3d(const PointSet& s, int a, int b, int c, int d);
int incircle(const PointSet& s, int a, int b, int c, int d);

/// Cached on the set; see PointSet::position_check.
const PositionCheck& check_general_position(const PointSet& s);

struct ConvexCheck {
  bool convex = false;
  int witness = -1;  // a non-vertex point index when not convex
};

/// 3D only; every point must be a vertex of the convex hull.
/// Pre: general position (throws the degeneracy otherwise).
ConvexCheck check_convex_position(const PointSet& s);

}  // namespace segdepth
