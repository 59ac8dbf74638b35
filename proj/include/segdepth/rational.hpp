#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace segdepth {

using Int = mpz_class;

/// Exact rational. Values built through make_rat / rat_from_strings are
/// canonical: denominator > 0, lowest terms. gmp arithmetic preserves
/// canonical form, and equality on canonical values is value equality.
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws GeomError(bad_input) on den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat rat_from_long(long v);

/// Parses decimal integer strings. Throws GeomError(bad_input) on garbage.
Int int_from_string(const std::string& s);
Rat rat_from_strings(const std::string& num, const std::string& den);

inline int sign_of(const Int& v) { return sgn(v); }
inline int sign_of(const Rat& v) { return sgn(v); }

/// Nearest integer to x*den (ties round up), computed exactly.
Int round_scaled(const Rat& x, const Int& den);

/// floor(sqrt(v)) for v >= 0.
Int isqrt_floor(const Int& v);

/// "num/den", or just "num" when den == 1.
std::string rat_to_string(const Rat& v);

bool fits_int64(const Int& v);
std::int64_t to_int64(const Int& v);

}  // namespace segdepth
