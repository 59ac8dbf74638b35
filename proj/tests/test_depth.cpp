#include "segdepth/depth.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "segdepth/errors.hpp"
#include "segdepth/facets.hpp"
#include "segdepth/lift.hpp"
#include "segdepth/predicates.hpp"
#include "testutil.hpp"

using namespace segdepth;
using testutil::P2;
using testutil::P3;

namespace {

PointSet lifted_cloud(int n, long range, unsigned seed) {
  PointSet s = P2(testutil::cloud2(n, range, seed));
  REQUIRE(s.position_check().general);
  return lift_set(s).lifted;
}

PointSet spatial_cloud(int n, long range, unsigned seed) {
  PointSet s = P3(testutil::cloud3(n, range, seed));
  REQUIRE(s.position_check().general);
  return s;
}

// side counts of the specific plane (p,q,r), evaluated the obvious way
std::pair<int, int> plane_sides(const PointSet& set, int p, int q, int r) {
  int pos = 0, neg = 0;
  for (int s = 0; s < set.size(); ++s) {
    if (s == p || s == q || s == r) continue;
    const int o = orient3d(set, p, q, r, s);
    REQUIRE(o != 0);
    (o > 0 ? pos : neg)++;
  }
  return {pos, neg};
}

}  // namespace

TEST_SUITE("depth") {
  TEST_CASE("simplex edges all have depth zero") {
    PointSet t = P3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        DepthRecord b = segment_depth_bruteforce(t, p, q);
        DepthRecord s = segment_depth_sweep(t, p, q);
        CHECK(b.depth == 0);
        CHECK(s.depth == 0);
        CHECK(b.p == p);
        CHECK(b.q == q);
      }
  }

  TEST_CASE("sweep equals brute force, pair by pair") {
    for (const PointSet& set :
         {lifted_cloud(12, 70, 555u), lifted_cloud(20, 90, 779u),
          spatial_cloud(12, 150, 999u)}) {
      const int n = set.size();
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
          DepthRecord b = segment_depth_bruteforce(set, p, q);
          DepthRecord s = segment_depth_sweep(set, p, q);
          CHECK(b.depth == s.depth);
          CHECK(b.depth <= (n - 2) / 2);
          // both witnesses must actually attain the depth
          auto [bp, bn] = plane_sides(set, p, q, b.witness);
          CHECK(std::min(bp, bn) == b.depth);
          auto [sp, sn] = plane_sides(set, p, q, s.witness);
          CHECK(std::min(sp, sn) == s.depth);
        }
    }
  }

  TEST_CASE("five points leave at most one point per side") {
    PointSet s = lifted_cloud(5, 30, 1234u);
    for (int p = 0; p < 5; ++p)
      for (int q = p + 1; q < 5; ++q) {
        CHECK(segment_depth_sweep(s, p, q).depth <= 1);
      }
  }

  TEST_CASE("no generic plane beats the third-point candidates") {
    PointSet set = lifted_cloud(10, 50, 31337u);
    const int n = set.size();
    std::mt19937_64 rng(8888u);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const int depth = segment_depth_sweep(set, p, q).depth;
        int probes = 0;
        while (probes < 5) {
          SpatialPoint v{rat_from_long(static_cast<long>(rng() % 2001) - 1000),
                         rat_from_long(static_cast<long>(rng() % 2001) - 1000),
                         rat_from_long(static_cast<long>(rng() % 2001) - 1000)};
          int pos = 0, neg = 0;
          bool degenerate = false;
          for (int s = 0; s < n; ++s) {
            if (s == p || s == q) continue;
            const int o =
                orient3d(set.spatial_at(p), set.spatial_at(q), v, set.spatial_at(s));
            if (o == 0) {
              degenerate = true;
              break;
            }
            (o > 0 ? pos : neg)++;
          }
          if (degenerate) continue;  // plane hit a point; pick another
          ++probes;
          CHECK(std::min(pos, neg) >= depth);
        }
      }
  }

  TEST_CASE("all pairs, histogram, and the parallel/serial kernels") {
    SUBCASE("simplex") {
      PointSet t = P3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
      AllDepths all = all_segment_depths(t);
      CHECK(all.records.size() == 6);
      CHECK(all.hist.s == std::vector<std::int64_t>{6, 0});
      CHECK(all.hist.total() == 6);
      DepthRecord m = max_depth_pair(t);
      CHECK(m.depth == 0);
      CHECK(m.p == 0);
      CHECK(m.q == 1);
    }

    SUBCASE("convex position pins the depth-zero count to the hull edges") {
      PointSet s = lifted_cloud(8, 60, 24601u);
      AllDepths all = all_segment_depths(s);
      CHECK(all.hist.total() == 28);
      CHECK(all.hist.s[0] == 3 * 8 - 6);  // edge count of a simplicial polytope
      AllDepths ref = all_segment_depths_serial(s);
      REQUIRE(all.records.size() == ref.records.size());
      for (std::size_t i = 0; i < all.records.size(); ++i) {
        CHECK(all.records[i].depth == ref.records[i].depth);
        CHECK(all.records[i].witness == ref.records[i].witness);
        CHECK(all.records[i].p == ref.records[i].p);
        CHECK(all.records[i].q == ref.records[i].q);
      }
      CHECK(all.hist.s == ref.hist.s);
      // record layout is pair-lexicographic and at() finds it
      for (int p = 0; p < 8; ++p)
        for (int q = p + 1; q < 8; ++q) {
          CHECK(all.at(p, q).p == p);
          CHECK(all.at(q, p).q == q);
        }
    }
  }

  TEST_CASE("depth is an affine invariant") {
    PointSet s = lifted_cloud(10, 40, 604361u);
    AllDepths before = all_segment_depths(s);
    std::mt19937_64 rng(12021u);
    for (int trial = 0; trial < 3; ++trial) {
      // random unimodular map: a few integer shears, maybe a reflection
      long a[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      for (int shear = 0; shear < 4; ++shear) {
        int i = static_cast<int>(rng() % 3);
        int j = static_cast<int>(rng() % 3);
        if (i == j) continue;
        long f = static_cast<long>(rng() % 5) - 2;
        for (int k = 0; k < 3; ++k) a[i][k] += f * a[j][k];
      }
      if (trial == 2) {
        for (int k = 0; k < 3; ++k) a[0][k] = -a[0][k];  // det -1 flip
      }
      std::vector<SpatialPoint> mapped;
      for (int i = 0; i < s.size(); ++i) {
        SpatialPoint pt = s.spatial_at(i);
        mapped.push_back({a[0][0] * pt.x + a[0][1] * pt.y + a[0][2] * pt.z + 7,
                          a[1][0] * pt.x + a[1][1] * pt.y + a[1][2] * pt.z - 3,
                          a[2][0] * pt.x + a[2][1] * pt.y + a[2][2] * pt.z + 1});
      }
      AllDepths after = all_segment_depths(PointSet::spatial(std::move(mapped)));
      for (std::size_t i = 0; i < before.records.size(); ++i) {
        CHECK(before.records[i].depth == after.records[i].depth);
      }
    }
  }

  TEST_CASE("segments of depth at most j lie in two or more oriented j-facets") {
    for (const PointSet& set :
         {lifted_cloud(12, 65, 112233u), spatial_cloud(10, 120, 445566u)}) {
      const int n = set.size();
      AllDepths all = all_segment_depths(set);
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
          const int d = all.at(p, q).depth;
          std::vector<int> facet_count(n - 2, 0);
          for (int r = 0; r < n; ++r) {
            if (r == p || r == q) continue;
            const int j1 = facet_j(set, p, q, r);
            facet_count[j1]++;
            facet_count[n - 3 - j1]++;
          }
          for (int j = d; 2 * j <= n - 4; ++j) {
            CHECK(facet_count[j] >= 2);
          }
        }
    }
  }

  TEST_CASE("twice the depth sums stay under thrice the facet counts") {
    for (const PointSet& set :
         {lifted_cloud(14, 75, 192837u), spatial_cloud(11, 130, 372819u)}) {
      AllDepths all = all_segment_depths(set);
      FacetHistogram fh = build_facet_histogram(set);
      for (int j = 0; 2 * j <= set.size() - 4; ++j) {
        CHECK(2 * all.hist.S[j] <= 3 * fh.e[j]);
      }
    }
  }

  TEST_CASE("circular depth of planar pairs") {
    SUBCASE("three points: every pair depth zero") {
      PointSet s = P2({{0, 0}, {5, 1}, {2, 7}});
      for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q) {
          DepthRecord r = planar_pair_depth(s, p, q);
          CHECK(r.depth == 0);
        }
    }

    SUBCASE("matches the segment depth of the lifted pair on every pair") {
      PointSet flat = P2(testutil::cloud2(16, 85, 13579u));
      REQUIRE(flat.position_check().general);
      PointSet lifted = lift_set(flat).lifted;
      for (int p = 0; p < flat.size(); ++p)
        for (int q = p + 1; q < flat.size(); ++q) {
          DepthRecord planar = planar_pair_depth(flat, p, q);
          DepthRecord spatial = segment_depth_sweep(lifted, p, q);
          CHECK(planar.depth == spatial.depth);
        }
    }

    SUBCASE("a convex polygon has hull pairs of positive circular depth") {
      // six points on the parabola y = x^2: in convex position, no three
      // collinear, no four cocircular (a circle meets the parabola where the
      // roots sum to zero; these x values cannot)
      PointSet s = P2({{1, 1}, {2, 4}, {4, 16}, {8, 64}, {16, 256}, {32, 1024}});
      REQUIRE(s.position_check().general);
      int positive = 0;
      for (int p = 0; p < 6; ++p)
        for (int q = p + 1; q < 6; ++q) {
          positive += planar_pair_depth(s, p, q).depth > 0;
        }
      // 15 pairs, 12 lifted hull edges: exactly three buried diagonals
      CHECK(positive == 3);
    }
  }

  TEST_CASE("degeneracies and bad input") {
    PointSet online = P3({{0, 0, 0}, {2, 2, 2}, {1, 1, 1}, {5, 0, 3}, {0, 7, 1}});
    try {
      segment_depth_sweep(online, 0, 1);
      FAIL("expected an axis collinearity failure");
    } catch (const GeomError& e) {
      CHECK(e.code() == ErrCode::collinear_with_axis);
      CHECK(e.witness() == std::vector<int>{0, 1, 2});
    }
    CHECK_THROWS_AS(segment_depth_bruteforce(online, 0, 1), GeomError);

    PointSet flat = P3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 5}});
    try {
      segment_depth_sweep(flat, 0, 1);
      FAIL("expected a coplanarity failure");
    } catch (const GeomError& e) {
      CHECK(e.code() == ErrCode::degenerate_position);
    }
    CHECK_THROWS_AS(all_segment_depths(flat), GeomError);
    CHECK_THROWS_AS(all_segment_depths_serial(flat), GeomError);

    PointSet t = P3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(segment_depth_sweep(t, 0, 4), GeomError);
    CHECK_THROWS_AS(segment_depth_sweep(t, 2, 2), GeomError);
    CHECK_THROWS_AS(segment_depth_bruteforce(P3({{0, 0, 0}, {1, 2, 3}}), 0, 1),
                    GeomError);
    PointSet planar = P2({{0, 0}, {4, 1}, {1, 5}, {3, 3}});
    CHECK_THROWS_AS(segment_depth_sweep(planar, 0, 1), GeomError);
    CHECK_THROWS_AS(planar_pair_depth(t, 0, 1), GeomError);
  }
}
