#pragma once

#include <cstdint>
#include <vector>

#include "segdepth/points.hpp"

namespace segdepth {

/// Depth of the segment (p,q): the smallest count such that every plane
/// through p and q has at least that many points strictly on each side.
/// `witness` is a third point whose plane attains the minimum.
struct DepthRecord {
  int p = -1, q = -1;
  int depth = 0;
  int witness = -1;
};

/// s[j] = number of segments of depth exactly j, S[j] the running sums;
/// j ranges over [0, floor((n-2)/2)].
struct DepthHistogram {
  int n = 0;
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> S;

  std::int64_t total() const;
};

struct AllDepths {
  std::vector<DepthRecord> records;  // (p,q) lexicographic, p < q
  DepthHistogram hist;

  const DepthRecord& at(int p, int q) const;
};

/// Oracle: minimum over all third points r of the smaller side count of the
/// plane (p,q,r); the smallest such r is the witness. O(n^2) signs.
DepthRecord segment_depth_bruteforce(const PointSet& set, int p, int q);

/// Same contract, by rotating a half-plane around the line pq: points are
/// ordered by exact angle around the axis (sign predicates only, after
/// Observation that cross products of projected directions are orient3d
/// signs), and the side counts change by one at each event. O(n log n) signs
/// per pair. The witness is some attaining r, not necessarily the smallest.
DepthRecord segment_depth_sweep(const PointSet& set, int p, int q);

/// Sweep over every unordered pair; OpenMP pair-level parallelism.
AllDepths all_segment_depths(const PointSet& set);
/// Single-threaded reference of the same sweep.
AllDepths all_segment_depths_serial(const PointSet& set);

/// Maximal-depth record; ties broken by lexicographically smallest pair.
DepthRecord max_depth_pair(const PointSet& set);

/// Circular depth of a planar pair: minimum over third points r of the
/// smaller of (inside, outside) counts of the circle (p,q,r). Lines through
/// p,q need no separate treatment: they are dominated by a circle through
/// some third point, which the lifting equivalence tests confirm.
DepthRecord planar_pair_depth(const PointSet& set, int p, int q);

}  // namespace segdepth
