#pragma once

#include <cstdint>

#include "segdepth/points.hpp"
#include "segdepth/rational.hpp"
#include "segdepth/report.hpp"

namespace segdepth {

/// Ceiling for the number of segments of depth at most j in an n-point 3D
/// set: 3(j+1)n - 3(j+1)(j+2). Defined for 0 <= 2j <= n-4.
std::int64_t prop_Sj_bound(int j, int n);

/// The guaranteed depth: some segment of any n-point 3D set in general
/// position must have depth at least floor_value. jstar = base -
/// sqrt(radicand) is the smaller root of 3(j+1)n - 3(j+1)(j+2) = C(n,2);
/// every integer j < jstar forces a segment of depth > j.
struct DepthGuarantee {
  int n = 0;
  Rat jstar_base;      // (n-3)/2
  Rat jstar_radicand;  // ((n-2)^2 - 1)/12
  std::int64_t floor_value = 0;

  /// sign of (jstar - t), decided by sign-preserving squaring
  int compare_jstar(const Rat& t) const;
};

DepthGuarantee depth_guarantee(int n);  // n >= 4

/// Conjectured ceiling for the number of depth-j segments of a convex
/// n-point set: 3n - 8j - 6, for 0 <= j <= ceil(n/4) - 1. Evaluated
/// literally over that whole range.
std::int64_t conj2_bound(int j, int n);

/// Conjectured supply of deep pairs (at least pair_count pairs of depth at
/// least depth_threshold), together with the bookkeeping inequality that
/// derives it from the conjectured per-depth ceilings.
struct Conj3Threshold {
  std::int64_t pair_count = 0;       // n + 2
  std::int64_t depth_threshold = 0;  // floor(n/4) - 1
  Int derivation_lhs;                // sum of ceilings below the threshold
  Int derivation_rhs;                // C(n,2) - (n+2)
  bool derivation_holds = false;
};

Conj3Threshold conj3_threshold(int n);  // n >= 4

/// Runs every closed-form check against one 3D set in general position:
/// facet-count ceilings, depth-count ceilings, the depth guarantee, and --
/// when the set is in convex position -- the exact facet counts, the
/// depth-one census, and the conjectured ceilings (marked as conjectures).
BoundReport verify_set(const PointSet& set);

}  // namespace segdepth
