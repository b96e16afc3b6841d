#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsurf/rational.hpp"

namespace gsurf {

/// Q(zeta_e) presented as Q[x]/Phi_e(x). Instances are immutable and shared;
/// obtain them through get().
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int conductor);

  int conductor() const { return conductor_; }
  /// phi(e), the dimension over Q.
  int degree() const { return degree_; }
  /// Coefficients of Phi_e, lowest degree first (monic, length degree+1).
  const std::vector<Integer>& cyclotomic_polynomial() const { return phi_; }
  /// Power-basis coordinates of x^k for 0 <= k < e.
  const std::vector<Integer>& power(int k) const { return powers_[k]; }

  explicit CyclotomicField(int conductor);

 private:
  int conductor_;
  int degree_;
  std::vector<Integer> phi_;
  std::vector<std::vector<Integer>> powers_;
};

/// Exact element of a cyclotomic field, in the power basis
/// {zeta_e^j : 0 <= j < phi(e)} reduced modulo Phi_e. Equality is
/// coefficient-wise after embedding both sides into the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& value, int conductor = 1);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}   // NOLINT(google-explicit-constructor)
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coefficients);

  /// zeta_e^k with zeta_e = exp(2 pi i / e).
  static Cyclotomic zeta(int conductor, long k = 1);

  int conductor() const { return field_->conductor(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Image in Q(zeta_f); requires conductor() | f.
  Cyclotomic embed(int f) const;

  /// zeta -> zeta^k; k must be coprime to the conductor.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;

  /// Numerical value under zeta_e -> exp(2 pi i k / e).
  std::complex<double> to_complex(long k = 1) const;

  /// Exact text form, e.g. "z5^2 - z5", "3/2", "-1/2*z3 + 1".
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Total order on values: lexicographic on coefficients in the lcm field.
  /// Only meant for reproducible sorting.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

/// Multiplication with both operands first embedded in the lcm field.
inline Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic galois_apply(const Cyclotomic& a, long k) { return a.galois(k); }

int euler_phi(int n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_floor(long a, long m);

}  // namespace gsurf
