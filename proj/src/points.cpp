#include "segdepth/points.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "segdepth/errors.hpp"
#include "segdepth/predicates.hpp"

namespace segdepth {

namespace {

// Largest |scaled coordinate| for which the worst-case predicate determinant
// provably fits in __int128: |det| <= 48*M^3 for orient3d, 48*M^4 for the
// lifted incircle determinant on 2D coordinates.
constexpr std::int64_t kFastMax3D = 1'000'000'000'000;  // 1e12
constexpr std::int64_t kFastMax2D = 1'000'000'000;      // 1e9

}  // namespace

PointSet::PointSet(int dim, std::vector<Rat> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ != 2 && dim_ != 3) {
    throw GeomError(ErrCode::bad_input, "dimension must be 2 or 3");
  }
  if (coords_.size() % dim_ != 0) {
    throw GeomError(ErrCode::bad_input, "coordinate count not a multiple of dimension");
  }
  n_ = static_cast<int>(coords_.size()) / dim_;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      bool same = true;
      for (int a = 0; a < dim_; ++a) {
        if (coord(i, a) != coord(j, a)) {
          same = false;
          break;
        }
      }
      if (same) {
        throw GeomError(ErrCode::bad_input,
                        "duplicate points at indices " + std::to_string(i) + " and " +
                            std::to_string(j),
                        {i, j});
      }
    }
  }
  build_integer_view();
}

PointSet PointSet::planar(std::vector<PlanarPoint> pts) {
  std::vector<Rat> c;
  c.reserve(pts.size() * 2);
  for (auto& p : pts) {
    c.push_back(std::move(p.x));
    c.push_back(std::move(p.y));
  }
  return PointSet(2, std::move(c));
}

PointSet PointSet::spatial(std::vector<SpatialPoint> pts) {
  std::vector<Rat> c;
  c.reserve(pts.size() * 3);
  for (auto& p : pts) {
    c.push_back(std::move(p.x));
    c.push_back(std::move(p.y));
    c.push_back(std::move(p.z));
  }
  return PointSet(3, std::move(c));
}

PointSet PointSet::from_coords(int dimension, std::vector<Rat> coords) {
  return PointSet(dimension, std::move(coords));
}

PlanarPoint PointSet::planar_at(int i) const { return {coord(i, 0), coord(i, 1)}; }

SpatialPoint PointSet::spatial_at(int i) const {
  return {coord(i, 0), coord(i, 1), coord(i, 2)};
}

void PointSet::build_integer_view() {
  Int lcm_den = 1;
  for (const Rat& c : coords_) {
    Int l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    lcm_den = l;
  }
  icoords_.reserve(coords_.size());
  Int max_abs = 0;
  for (const Rat& c : coords_) {
    Int scaled = c.get_num() * (lcm_den / c.get_den());
    Int a = abs(scaled);
    if (a > max_abs) max_abs = a;
    icoords_.push_back(std::move(scaled));
  }
  const std::int64_t gate = dim_ == 3 ? kFastMax3D : kFastMax2D;
  fast_ = max_abs <= gate;
  if (fast_) {
    fcoords_.reserve(icoords_.size());
    for (const Int& v : icoords_) fcoords_.push_back(to_int64(v));
  }
}

const PositionCheck& PointSet::position_check() const {
  std::call_once(cache_->once, [this] { cache_->check = detail_run_position_check(*this); });
  return cache_->check;
}

void PointSet::require_general_position() const {
  const PositionCheck& c = position_check();
  if (!c.general) {
    std::string msg = "point set is degenerate; witness indices:";
    for (int i : c.witness) msg += " " + std::to_string(i);
    throw GeomError(ErrCode::degenerate_position, msg, c.witness);
  }
}

}  // namespace segdepth
