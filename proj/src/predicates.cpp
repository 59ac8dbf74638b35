#include "segdepth/predicates.hpp"

#include <cstdint>

#include "segdepth/errors.hpp"

namespace segdepth {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

inline int sign_i128(i128 v) { return (v > 0) - (v < 0); }

inline int orient2d_fast(const i64* a, const i64* b, const i64* c) {
  const i128 det = i128(b[0] - a[0]) * i128(c[1] - a[1]) -
                   i128(b[1] - a[1]) * i128(c[0] - a[0]);
  return sign_i128(det);
}

inline int orient3d_fast(const i64* a, const i64* b, const i64* c, const i64* d) {
  const i64 ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const i64 vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  const i64 wx = d[0] - a[0], wy = d[1] - a[1], wz = d[2] - a[2];
  const i128 det = i128(ux) * (i128(vy) * wz - i128(vz) * wy) -
                   i128(uy) * (i128(vx) * wz - i128(vz) * wx) +
                   i128(uz) * (i128(vx) * wy - i128(vy) * wx);
  return sign_i128(det);
}

// Lifted orient3d on 2D integer coordinates: rows (p - a, lift(p) - lift(a)).
inline int lifted_orient3d_fast(const i64* a, const i64* b, const i64* c, const i64* d) {
  const i64 za = a[0] * a[0] + a[1] * a[1];
  const i64 ux = b[0] - a[0], uy = b[1] - a[1], uz = b[0] * b[0] + b[1] * b[1] - za;
  const i64 vx = c[0] - a[0], vy = c[1] - a[1], vz = c[0] * c[0] + c[1] * c[1] - za;
  const i64 wx = d[0] - a[0], wy = d[1] - a[1], wz = d[0] * d[0] + d[1] * d[1] - za;
  const i128 det = i128(ux) * (i128(vy) * wz - i128(vz) * wy) -
                   i128(uy) * (i128(vx) * wz - i128(vz) * wx) +
                   i128(uz) * (i128(vx) * wy - i128(vy) * wx);
  return sign_i128(det);
}

int orient2d_mpz(const Int& ax, const Int& ay, const Int& bx, const Int& by,
                 const Int& cx, const Int& cy) {
  const Int det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return sgn(det);
}

int det3_sign(const Int& ux, const Int& uy, const Int& uz, const Int& vx, const Int& vy,
              const Int& vz, const Int& wx, const Int& wy, const Int& wz) {
  const Int det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) +
                  uz * (vx * wy - vy * wx);
  return sgn(det);
}

int orient3d_mpz(const Int* a, const Int* b, const Int* c, const Int* d) {
  return det3_sign(b[0] - a[0], b[1] - a[1], b[2] - a[2], c[0] - a[0], c[1] - a[1],
                   c[2] - a[2], d[0] - a[0], d[1] - a[1], d[2] - a[2]);
}

int lifted_orient3d_mpz(const Int* a, const Int* b, const Int* c, const Int* d) {
  const Int za = a[0] * a[0] + a[1] * a[1];
  return det3_sign(b[0] - a[0], b[1] - a[1], b[0] * b[0] + b[1] * b[1] - za, c[0] - a[0],
                   c[1] - a[1], c[0] * c[0] + c[1] * c[1] - za, d[0] - a[0], d[1] - a[1],
                   d[0] * d[0] + d[1] * d[1] - za);
}

[[noreturn]] void throw_degenerate_circle() {
  throw GeomError(ErrCode::degenerate_circle,
                  "the three circle points are collinear");
}

}  // namespace

int orient2d(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
  const Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

int orient3d(const SpatialPoint& a, const SpatialPoint& b, const SpatialPoint& c,
             const SpatialPoint& d) {
  const Rat ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  const Rat vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
  const Rat wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;
  const Rat det =
      ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
  return sgn(det);
}

int incircle(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c,
             const PlanarPoint& d) {
  const int s2 = orient2d(a, b, c);
  if (s2 == 0) throw_degenerate_circle();
  auto lift = [](const PlanarPoint& p) -> SpatialPoint {
    return {p.x, p.y, p.x * p.x + p.y * p.y};
  };
  // d inside the circle <=> the lifted d is below the lifted plane; with the
  // orient3d anchor above that is -orient2d(a,b,c) * orient3d(lifted).
  return -s2 * orient3d(lift(a), lift(b), lift(c), lift(d));
}

int orient2d(const PointSet& s, int a, int b, int c) {
  if (s.fast()) return orient2d_fast(s.fast_row(a), s.fast_row(b), s.fast_row(c));
  return orient2d_mpz(s.scaled(a, 0), s.scaled(a, 1), s.scaled(b, 0), s.scaled(b, 1),
                      s.scaled(c, 0), s.scaled(c, 1));
}

int orient3d(const PointSet& s, int a, int b, int c, int d) {
  if (s.fast()) {
    return orient3d_fast(s.fast_row(a), s.fast_row(b), s.fast_row(c), s.fast_row(d));
  }
  const Int* base = &s.scaled(0, 0);
  return orient3d_mpz(base + 3 * a, base + 3 * b, base + 3 * c, base + 3 * d);
}

int incircle(const PointSet& s, int a, int b, int c, int d) {
  const int s2 = orient2d(s, a, b, c);
  if (s2 == 0) throw_degenerate_circle();
  if (s.fast()) {
    return -s2 * lifted_orient3d_fast(s.fast_row(a), s.fast_row(b), s.fast_row(c),
                                      s.fast_row(d));
  }
  const Int* base = &s.scaled(0, 0);
  return -s2 * lifted_orient3d_mpz(base + 2 * a, base + 2 * b, base + 2 * c, base + 2 * d);
}

PositionCheck detail_run_position_check(const PointSet& s) {
  const int n = s.size();
  if (s.dimension() == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (orient2d(s, i, j, k) == 0) return {false, {i, j, k}};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = k + 1; l < n; ++l)
            if (incircle(s, i, j, k, l) == 0) return {false, {i, j, k, l}};
    return {true, {}};
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (orient3d(s, i, j, k, l) == 0) return {false, {i, j, k, l}};
  return {true, {}};
}

const PositionCheck& check_general_position(const PointSet& s) {
  return s.position_check();
}

}  // namespace segdepth
