#include "gsurf/rational.hpp"

#include "gsurf/errors.hpp"

namespace gsurf {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw ValidationError("cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace gsurf
