#pragma once

#include <cstdint>
#include <vector>

#include "segdepth/points.hpp"
#include "segdepth/report.hpp"

namespace segdepth {

/// Oriented j-facet counts of a 3D set: e[j] oriented triangles with exactly
/// j points on the positive side of their plane, j in [0, n-3], and the
/// running sums E[j]. Every unordered triple contributes two orientations, so
/// the e[j] sum to 2*C(n,3) and e[j] = e[n-3-j].
struct FacetHistogram {
  int n = 0;
  std::vector<std::int64_t> e;
  std::vector<std::int64_t> E;

  std::int64_t total() const;
};

/// Number of points s outside {p,q,r} with orient3d(p,q,r,s) = +1.
/// Throws degenerate-position on a coplanar quadruple.
int facet_j(const PointSet& set, int p, int q, int r);

/// Exhaustive histogram over all oriented triples; OpenMP-partitioned.
FacetHistogram build_facet_histogram(const PointSet& set);
/// Single-threaded reference: counts both orientations of every triple
/// independently instead of mirroring, so it double-checks the antisymmetry.
FacetHistogram build_facet_histogram_serial(const PointSet& set);

/// 2[ C(j+2,2)*n - 2*C(j+3,3) ], the proven ceiling on E_j.
/// Throws out-of-range unless 0 <= 2j <= n-4.
std::int64_t welzl_bound(int j, int n);

/// 2(j+1)n - 2(j+1)(j+2), the exact e_j of a convex-position set.
/// Throws out-of-range unless 0 <= 2j <= n-4.
std::int64_t corollary_ej(int j, int n);

/// Compares empirical E_j against welzl_bound for every in-range j.
/// Equality for all j is the convex-position signature; an entry above the
/// bound would contradict a proven theorem.
BoundReport check_welzl(const PointSet& set);
BoundReport check_welzl(const FacetHistogram& h);

}  // namespace segdepth
