#include "segdepth/lift.hpp"

#include "detail.hpp"
#include "segdepth/errors.hpp"
#include "segdepth/predicates.hpp"

namespace segdepth {

SpatialPoint lift_point(const PlanarPoint& p) {
  return {p.x, p.y, p.x * p.x + p.y * p.y};
}

LiftedSet lift_set(const PointSet& set) {
  if (set.dimension() != 2) {
    throw GeomError(ErrCode::bad_input, "only planar sets lift");
  }
  std::vector<SpatialPoint> up;
  up.reserve(set.size());
  for (int i = 0; i < set.size(); ++i) up.push_back(lift_point(set.planar_at(i)));
  return {set, PointSet::spatial(std::move(up))};
}

SideCounts circle_side_counts(const PointSet& set, int p, int q, int r) {
  if (set.dimension() != 2) {
    throw GeomError(ErrCode::bad_input, "circle side counts need a planar set");
  }
  detail::check_indices(set, {p, q, r});
  SideCounts c;
  for (int s = 0; s < set.size(); ++s) {
    if (s == p || s == q || s == r) continue;
    const int side = incircle(set, p, q, r, s);
    if (side == 0) {
      throw GeomError(ErrCode::degenerate_position, "cocircular quadruple",
                      {p, q, r, s});
    }
    (side > 0 ? c.inside : c.outside)++;
  }
  return c;
}

}  // namespace segdepth
