#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gsurf {

using Integer = mpz_class;
/// Canonical (reduced, positive denominator) arbitrary-precision rational.
using Rational = mpq_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "7", "-3/4", "6/8" (reduced on the way in).
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gsurf
