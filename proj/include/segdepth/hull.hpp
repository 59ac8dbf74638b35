#pragma once

#include <string>
#include <vector>

#include "segdepth/depth.hpp"
#include "segdepth/points.hpp"
#include "segdepth/report.hpp"

namespace segdepth {

/// Oriented hull facet; every non-hull point sits on its negative side.
/// nbr[i] is the facet index across edge i, edges being (a,b), (b,c), (c,a).
struct HullFacet {
  int a = -1, b = -1, c = -1;
  int nbr[3] = {-1, -1, -1};
};

struct HullEdge {
  int u = -1, v = -1;   // u < v
  int f1 = -1, f2 = -1; // the two incident facets
};

/// Convex hull of a 3D set in general position: simplicial, with facet
/// adjacency, edge list, and per-vertex degrees.
struct HullGraph {
  int n = 0;                  // size of the underlying point set
  std::vector<int> vertices;  // hull vertex indices, ascending
  std::vector<HullFacet> facets;
  std::vector<HullEdge> edges;  // (u,v) lexicographic
  std::vector<int> degree;      // indexed by point; 0 for interior points

  bool is_vertex(int i) const { return degree[i] > 0; }
  std::string to_text() const;
};

/// Incremental construction, orient3d signs only. Throws bad-input for
/// fewer than four points, degenerate-position on a coplanar quadruple.
HullGraph convex_hull_3d(const PointSet& set);
/// Hull of a subset given by original indices (at least four of them).
HullGraph convex_hull_3d(const PointSet& set, const std::vector<int>& active);

/// A segment that joins the hull when one point is deleted, with every point
/// whose deletion exposes it. Such segments have depth exactly one and carry
/// one or two generators; both facts are checked by tests, not assumed here.
struct GeneratedSegment {
  int u = -1, v = -1;           // u < v
  std::vector<int> generators;  // ascending
};

/// All segments of a convex-position set that become hull edges after one
/// deletion. Throws not-convex-position when some point is interior.
std::vector<GeneratedSegment> depth_one_segments(const PointSet& set);

/// The depth-one census of a convex-position set: s_1 against its ceiling
/// 3n-12, the degree-surplus identity sum(deg(p)-3) = 3n-12, and the exact
/// refinement s_1 + sum(#generators - 1) = 3n-12 (for n >= 6 the excess term
/// is just the number of doubly-generated segments).
BoundReport s1_bound_report(const PointSet& set);
/// Same census reusing an already-computed depth table.
BoundReport s1_bound_report(const PointSet& set, const AllDepths& depths);

}  // namespace segdepth
