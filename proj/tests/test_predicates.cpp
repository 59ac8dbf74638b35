#include "segdepth/predicates.hpp"

#include <vector>

#include "doctest.h"
#include "segdepth/errors.hpp"
#include "testutil.hpp"

using namespace segdepth;
using testutil::P2;
using testutil::P3;

namespace {

PlanarPoint pp(long x, long y) { return {rat_from_long(x), rat_from_long(y)}; }

SpatialPoint sp(long x, long y, long z) {
  return {rat_from_long(x), rat_from_long(y), rat_from_long(z)};
}

}  // namespace

using testutil::incircle_by_circumcenter;

TEST_SUITE("predicates") {
  TEST_CASE("orient2d basic signs") {
    CHECK(orient2d(pp(0, 0), pp(1, 0), pp(0, 1)) == 1);
    CHECK(orient2d(pp(0, 0), pp(0, 1), pp(1, 0)) == -1);
    CHECK(orient2d(pp(0, 0), pp(1, 1), pp(3, 3)) == 0);
    PlanarPoint a{make_rat(1, 3), make_rat(1, 7)};
    PlanarPoint b{make_rat(2, 3), make_rat(1, 7)};
    PlanarPoint c{make_rat(1, 3), make_rat(8, 7)};
    CHECK(orient2d(a, b, c) == 1);
  }

  TEST_CASE("orient3d anchored at the standard basis") {
    CHECK(orient3d(sp(0, 0, 0), sp(1, 0, 0), sp(0, 1, 0), sp(0, 0, 1)) == 1);
    CHECK(orient3d(sp(0, 0, 0), sp(0, 1, 0), sp(1, 0, 0), sp(0, 0, 1)) == -1);
    CHECK(orient3d(sp(0, 0, 0), sp(1, 0, 0), sp(0, 1, 0), sp(1, 1, 0)) == 0);
  }

  TEST_CASE("incircle matches the unit-circle picture and ignores orientation") {
    PlanarPoint a = pp(1, 0), b = pp(0, 1), c = pp(-1, 0);
    CHECK(incircle(a, b, c, pp(0, 0)) == 1);
    CHECK(incircle(a, b, c, pp(2, 2)) == -1);
    CHECK(incircle(a, b, c, pp(0, -1)) == 0);
    // reversing the triangle's orientation must not flip the answer
    CHECK(incircle(c, b, a, pp(0, 0)) == 1);
    CHECK(incircle(c, b, a, pp(2, 2)) == -1);
    CHECK(incircle(b, a, c, pp(0, -1)) == 0);
    CHECK_THROWS_AS(incircle(pp(0, 0), pp(1, 1), pp(2, 2), pp(5, 0)), GeomError);
    try {
      incircle(pp(0, 0), pp(1, 1), pp(2, 2), pp(5, 0));
    } catch (const GeomError& e) {
      CHECK(e.code() == ErrCode::degenerate_circle);
    }
  }

  TEST_CASE("incircle agrees with the circumcenter oracle on a random cloud") {
    auto pts = testutil::cloud2(18, 40, 20260822u);
    PointSet s = P2(pts);
    REQUIRE(s.fast());
    const int n = s.size();
    std::vector<PlanarPoint> raw;
    for (int i = 0; i < n; ++i) raw.push_back(s.planar_at(i));
    int checked = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (orient2d(raw[i], raw[j], raw[k]) == 0) continue;
          for (int l = 0; l < n; ++l) {
            if (l == i || l == j || l == k) continue;
            const int want = incircle_by_circumcenter(raw[i], raw[j], raw[k], raw[l]);
            REQUIRE(incircle(raw[i], raw[j], raw[k], raw[l]) == want);
            REQUIRE(incircle(s, i, j, k, l) == want);
            ++checked;
          }
        }
      }
    }
    CHECK(checked > 10000);
  }

  TEST_CASE("integer-view paths agree with the rational definitions") {
    SUBCASE("fractional coordinates use the scaled fast path") {
      std::vector<PlanarPoint> pts;
      for (long i = 0; i < 12; ++i) {
        pts.push_back({make_rat(3 * i * i - 7 * i + 2, 1 + i % 5),
                       make_rat(2 * i * i * i - 40 * i, 3 + i % 7)});
      }
      PointSet s = PointSet::planar(pts);
      REQUIRE(s.fast());
      const int n = s.size();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            CHECK(orient2d(s, i, j, k) == orient2d(pts[i], pts[j], pts[k]));
            if (orient2d(pts[i], pts[j], pts[k]) == 0) continue;
            for (int l = k + 1; l < n; ++l) {
              CHECK(incircle(s, i, j, k, l) == incircle(pts[i], pts[j], pts[k], pts[l]));
            }
          }
    }

    SUBCASE("oversized 3d coordinates fall back to big integers") {
      const long big = 2'000'000'000'000;  // above the 3d fast-path gate
      auto base = testutil::cloud3(9, 500, 77u);
      std::vector<SpatialPoint> pts;
      for (const auto& p : base) {
        pts.push_back({rat_from_long(p[0] + big), rat_from_long(p[1] - big),
                       rat_from_long(p[2] + 3 * big)});
      }
      PointSet s = PointSet::spatial(pts);
      REQUIRE(!s.fast());
      const int n = s.size();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
              CHECK(orient3d(s, i, j, k, l) == orient3d(pts[i], pts[j], pts[k], pts[l]));
            }
    }

    SUBCASE("oversized 2d coordinates fall back to big integers") {
      const long big = 40'000'000'000;  // above the 2d fast-path gate
      auto base = testutil::cloud2(10, 300, 99u);
      std::vector<PlanarPoint> pts;
      for (const auto& p : base) {
        pts.push_back({rat_from_long(p[0] - big), rat_from_long(p[1] + big)});
      }
      PointSet s = PointSet::planar(pts);
      REQUIRE(!s.fast());
      const int n = s.size();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            CHECK(orient2d(s, i, j, k) == orient2d(pts[i], pts[j], pts[k]));
            if (orient2d(pts[i], pts[j], pts[k]) == 0) continue;
            for (int l = 0; l < n; ++l) {
              if (l == i || l == j || l == k) continue;
              CHECK(incircle(s, i, j, k, l) == incircle(pts[i], pts[j], pts[k], pts[l]));
            }
          }
    }
  }

  TEST_CASE("general-position check reports the first degeneracy") {
    SUBCASE("collinear triple in the plane") {
      PointSet s = P2({{0, 5}, {1, 1}, {9, 2}, {2, 2}, {7, 6}, {3, 3}});
      const PositionCheck& c = check_general_position(s);
      CHECK(!c.general);
      CHECK(c.witness == std::vector<int>{1, 3, 5});
      CHECK_THROWS_AS(s.require_general_position(), GeomError);
      try {
        s.require_general_position();
      } catch (const GeomError& e) {
        CHECK(e.code() == ErrCode::degenerate_position);
        CHECK(e.witness() == std::vector<int>{1, 3, 5});
      }
    }

    SUBCASE("cocircular quadruple in the plane") {
      // unit square corners are cocircular; the extra points stay generic
      PointSet s = P2({{0, 0}, {10, 3}, {4, 0}, {4, 4}, {0, 4}, {11, 7}});
      const PositionCheck& c = s.position_check();
      CHECK(!c.general);
      CHECK(c.witness == std::vector<int>{0, 2, 3, 4});
    }

    SUBCASE("coplanar quadruple in space") {
      PointSet s = P3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 7}, {3, 3, 0}});
      const PositionCheck& c = s.position_check();
      CHECK(!c.general);
      CHECK(c.witness == std::vector<int>{0, 1, 2, 4});
    }

    SUBCASE("generic sets pass") {
      PointSet s = P2({{0, 0}, {5, 1}, {2, 7}, {9, 4}, {6, 9}});
      CHECK(s.position_check().general);
      s.require_general_position();
      PointSet t = P3({{0, 0, 0}, {9, 1, 1}, {1, 8, 2}, {2, 1, 7}, {5, 6, 9}});
      CHECK(t.position_check().general);
    }
  }

  TEST_CASE("point-set construction rejects bad input") {
    CHECK_THROWS_AS(P2({{1, 2}, {3, 4}, {1, 2}}), GeomError);
    try {
      P2({{1, 2}, {3, 4}, {1, 2}});
    } catch (const GeomError& e) {
      CHECK(e.code() == ErrCode::bad_input);
      CHECK(e.witness() == std::vector<int>{0, 2});
    }
    CHECK_THROWS_AS(PointSet::from_coords(3, {rat_from_long(1), rat_from_long(2)}),
                    GeomError);
    CHECK_THROWS_AS(PointSet::from_coords(4, std::vector<Rat>(8, Rat(1))), GeomError);
    CHECK_THROWS_AS(PointSet::from_coords(0, {}), GeomError);
  }
}
