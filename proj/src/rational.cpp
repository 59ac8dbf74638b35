#include "segdepth/rational.hpp"

#include <limits>

#include "segdepth/errors.hpp"

namespace segdepth {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) {
    throw GeomError(ErrCode::bad_input, "rational with zero denominator");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_long(long v) { return Rat(v); }

Int int_from_string(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw GeomError(ErrCode::bad_input, "not a decimal integer: '" + s + "'");
  }
  return v;
}

Rat rat_from_strings(const std::string& num, const std::string& den) {
  return make_rat(int_from_string(num), int_from_string(den));
}

Int round_scaled(const Rat& x, const Int& den) {
  // floor(x*den + 1/2)
  Rat scaled = x * Rat(den);
  scaled += Rat(1, 2);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  return q;
}

Int isqrt_floor(const Int& v) {
  if (sgn(v) < 0) {
    throw GeomError(ErrCode::bad_input, "isqrt of negative value");
  }
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::string rat_to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool fits_int64(const Int& v) {
  static const Int kMin(std::numeric_limits<std::int64_t>::min());
  static const Int kMax(std::numeric_limits<std::int64_t>::max());
  return v >= kMin && v <= kMax;
}

std::int64_t to_int64(const Int& v) {
  // mpz_get_si saturates at long range; fits_int64 must be checked first.
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

}  // namespace segdepth
