#include "segdepth/rational.hpp"

#include "doctest.h"
#include "segdepth/errors.hpp"

using namespace segdepth;

TEST_SUITE("rational") {
  TEST_CASE("make_rat canonicalizes sign and lowest terms") {
    Rat r = make_rat(2, -4);
    CHECK(r.get_num() == -1);
    CHECK(r.get_den() == 2);
    CHECK(make_rat(0, 7) == 0);
    CHECK(make_rat(-6, -9) == make_rat(2, 3));
    CHECK_THROWS_AS(make_rat(1, 0), GeomError);
    try {
      make_rat(1, 0);
    } catch (const GeomError& e) {
      CHECK(e.code() == ErrCode::bad_input);
    }
  }

  TEST_CASE("integer string parsing") {
    CHECK(int_from_string("123") == 123);
    CHECK(int_from_string("-7") == -7);
    CHECK(int_from_string("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(int_from_string(""), GeomError);
    CHECK_THROWS_AS(int_from_string("12x"), GeomError);
    CHECK(rat_from_strings("-4", "6") == make_rat(-2, 3));
  }

  TEST_CASE("round_scaled rounds to nearest, ties up") {
    CHECK(round_scaled(make_rat(1, 3), 100) == 33);
    CHECK(round_scaled(make_rat(2, 3), 100) == 67);
    CHECK(round_scaled(make_rat(1, 2), 1) == 1);
    CHECK(round_scaled(make_rat(-1, 2), 1) == 0);
    CHECK(round_scaled(make_rat(7, 2), 1) == 4);
    CHECK(round_scaled(make_rat(-7, 2), 1) == -3);
    CHECK(round_scaled(rat_from_long(-5), 41) == -205);
  }

  TEST_CASE("isqrt_floor") {
    CHECK(isqrt_floor(0) == 0);
    CHECK(isqrt_floor(15) == 3);
    CHECK(isqrt_floor(16) == 4);
    CHECK(isqrt_floor(Int("1000000000000000000000000")) == Int("1000000000000"));
    CHECK_THROWS_AS(isqrt_floor(-1), GeomError);
  }

  TEST_CASE("rat_to_string") {
    CHECK(rat_to_string(make_rat(3, 2)) == "3/2");
    CHECK(rat_to_string(make_rat(4, 2)) == "2");
    CHECK(rat_to_string(rat_from_long(-5)) == "-5");
  }

  TEST_CASE("int64 range checks") {
    Int max63 = (Int(1) << 63) - 1;
    CHECK(fits_int64(max63));
    CHECK(to_int64(max63) == INT64_MAX);
    CHECK(!fits_int64(max63 + 1));
    Int min63 = -(Int(1) << 63);
    CHECK(fits_int64(min63));
    CHECK(to_int64(min63) == INT64_MIN);
    CHECK(!fits_int64(min63 - 1));
  }
}
