#include "segdepth/bounds.hpp"

#include <string>

#include "doctest.h"
#include "segdepth/errors.hpp"
#include "segdepth/facets.hpp"
#include "segdepth/lift.hpp"
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

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("depth-count ceiling formula") {
    CHECK(prop_Sj_bound(0, 10) == 24);
    CHECK(prop_Sj_bound(1, 10) == 42);
    CHECK(prop_Sj_bound(0, 4) == 6);  // simplex: every pair at depth 0, tight
    CHECK_THROWS_AS(prop_Sj_bound(2, 7), GeomError);
    CHECK_THROWS_AS(prop_Sj_bound(-1, 10), GeomError);
    // exactly 3/2 of the facet-count formula, as in the proof
    for (int n = 4; n <= 40; ++n) {
      for (int j = 0; 2 * j <= n - 4; ++j) {
        CHECK(2 * prop_Sj_bound(j, n) == 3 * corollary_ej(j, n));
      }
    }
  }

  TEST_CASE("depth guarantee") {
    SUBCASE("n=100 forces depth 21") {
      DepthGuarantee g = depth_guarantee(100);
      CHECK(g.floor_value == 21);
      CHECK(g.compare_jstar(rat_from_long(20)) == 1);   // jstar > 20
      CHECK(g.compare_jstar(rat_from_long(21)) == -1);  // jstar < 21
    }
    SUBCASE("n=4 hits the root exactly") {
      DepthGuarantee g = depth_guarantee(4);
      CHECK(g.floor_value == 0);
      CHECK(g.compare_jstar(rat_from_long(0)) == 0);  // jstar = 0 exactly
    }
    SUBCASE("small values") {
      CHECK(depth_guarantee(5).floor_value == 1);
      CHECK(depth_guarantee(6).floor_value == 1);
      CHECK(depth_guarantee(12).floor_value == 2);
    }
    SUBCASE("floor is the least integer at or above jstar") {
      for (int n = 4; n <= 300; ++n) {
        DepthGuarantee g = depth_guarantee(n);
        CHECK(g.compare_jstar(rat_from_long(g.floor_value)) <= 0);
        if (g.floor_value > 0) {
          CHECK(g.compare_jstar(rat_from_long(g.floor_value - 1)) == 1);
        }
      }
    }
    SUBCASE("tracks the asymptotic coefficient 1/2 - 1/sqrt(12)") {
      for (int n = 4; n <= 1000; ++n) {
        // floor((1/2 - 1/sqrt(12)) n) computed exactly: the irrational part
        // is sqrt(3 n^2), never a perfect square, so the floor is strict.
        const Int f = isqrt_floor(Int(3) * n * n);
        const std::int64_t envelope = (3LL * n - f.get_si() - 1) / 6;
        CHECK(depth_guarantee(n).floor_value >= envelope - 2);
        CHECK(depth_guarantee(n).floor_value <= envelope + 2);
      }
    }
    SUBCASE("bad input") { CHECK_THROWS_AS(depth_guarantee(3), GeomError); }
  }

  TEST_CASE("conjectured depth-count ceiling") {
    for (int n : {4, 7, 12, 33}) CHECK(conj2_bound(0, n) == 3 * n - 6);
    CHECK(conj2_bound(1, 12) == 22);
    CHECK(conj2_bound(2, 12) == 14);
    CHECK(conj2_bound(1, 5) == 1);  // literal value near the range end
    CHECK_THROWS_AS(conj2_bound(3, 12), GeomError);
    CHECK_THROWS_AS(conj2_bound(-1, 12), GeomError);
    CHECK_THROWS_AS(conj2_bound(1, 4), GeomError);
    // partial-sum identity against the closed form
    for (int n = 4; n <= 200; ++n) {
      const int top = (n + 3) / 4 - 1;
      std::int64_t run = 0;
      for (int j = 0; j <= top; ++j) {
        run += conj2_bound(j, n);
        CHECK(run == 3LL * (j + 1) * n - 4LL * j * (j + 1) - 6 * (j + 1));
      }
    }
  }

  TEST_CASE("deep-pair threshold") {
    Conj3Threshold t = conj3_threshold(12);
    CHECK(t.pair_count == 14);
    CHECK(t.depth_threshold == 2);
    CHECK(t.derivation_lhs == 52);
    CHECK(t.derivation_rhs == 52);  // equality at multiples of 4
    CHECK(t.derivation_holds);

    t = conj3_threshold(4);
    CHECK(t.pair_count == 6);
    CHECK(t.depth_threshold == 0);
    CHECK(t.derivation_lhs == 0);
    CHECK(t.derivation_rhs == 0);
    CHECK(t.derivation_holds);

    t = conj3_threshold(16);
    CHECK(t.derivation_lhs == 102);
    CHECK(t.derivation_rhs == 102);

    t = conj3_threshold(13);
    CHECK(t.derivation_lhs == 58);
    CHECK(t.derivation_rhs == 63);

    for (int n = 4; n <= 200; ++n) CHECK(conj3_threshold(n).derivation_holds);
    CHECK_THROWS_AS(conj3_threshold(3), GeomError);
  }

  TEST_CASE("full audit of one set") {
    SUBCASE("simplex: everything holds with equality") {
      PointSet s = P3({{0, 0, 0}, {9, 0, 0}, {0, 9, 0}, {0, 0, 9}});
      BoundReport r = verify_set(s);
      CHECK(!r.any_violation());
      CHECK(r.entries.size() > 8);
      for (const auto& e : r.entries) CHECK(e.status == CheckStatus::equal);
    }

    SUBCASE("convex cloud: theorems hold, conjectures audited") {
      BoundReport r = verify_set(lifted_cloud(12, 80, 2718u));
      CHECK(!r.any_theorem_violation());
      CHECK(!r.any_conjecture_violation());
      bool saw_conj = false, saw_exact = false, saw_census = false;
      for (const auto& e : r.entries) {
        saw_conj |= e.conjecture;
        saw_exact |= e.label == "e_j exact count";
        saw_census |= e.label == "s_1 plus regeneration excess";
        if (e.label == "e_j exact count") CHECK(e.status == CheckStatus::equal);
      }
      CHECK(saw_conj);
      CHECK(saw_exact);
      CHECK(saw_census);
      std::string text = r.to_text();
      CHECK(text.find("(conjecture)") != std::string::npos);
      CHECK(text.find("VIOLATION") == std::string::npos);
    }

    SUBCASE("non-convex cloud: convex-only entries are absent") {
      PointSet s = P3(testutil::cloud3(12, 150, 999u));
      REQUIRE(s.position_check().general);
      BoundReport r = verify_set(s);
      CHECK(!r.any_theorem_violation());
      for (const auto& e : r.entries) {
        CHECK(e.label != "e_j exact count");
        CHECK(!e.conjecture);
      }
    }

    SUBCASE("rejections") {
      CHECK_THROWS_AS(verify_set(P2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})), GeomError);
      CHECK_THROWS_AS(
          verify_set(P3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})), GeomError);
      try {
        verify_set(P3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 5}}));
        FAIL("expected a degeneracy");
      } catch (const GeomError& e) {
        CHECK(e.code() == ErrCode::degenerate_position);
      }
    }
  }
}
