#include <random>

#include "doctest.h"
#include "gsurf/cyclotomic.hpp"
#include "gsurf/errors.hpp"
#include "gsurf/matrix.hpp"

using namespace gsurf;

namespace {

Cyclotomic from_coeffs(int e, std::vector<long> c) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return Cyclotomic(CyclotomicField::get(e), std::move(q));
}

Cyclotomic random_cyclotomic(std::mt19937& rng, int e) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c;
  for (int j = 0; j < euler_phi(e); ++j) c.emplace_back(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return Cyclotomic(CyclotomicField::get(e), std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(CyclotomicField::get(1)->cyclotomic_polynomial() == std::vector<Integer>{-1, 1});
  CHECK(CyclotomicField::get(4)->cyclotomic_polynomial() == std::vector<Integer>{1, 0, 1});
  CHECK(CyclotomicField::get(6)->cyclotomic_polynomial() == std::vector<Integer>{1, -1, 1});
  CHECK(CyclotomicField::get(12)->cyclotomic_polynomial() == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(CyclotomicField::get(30)->degree() == 8);
}

TEST_CASE("cyclo_mul examples") {
  const Cyclotomic i = Cyclotomic::zeta(4);
  CHECK(cyclo_mul(Cyclotomic(1) + i, Cyclotomic(1) - i) == Cyclotomic(2));
  const Cyclotomic w = Cyclotomic::zeta(3);
  CHECK(cyclo_mul(w, w) == from_coeffs(3, {-1, -1}));
  CHECK(cyclo_mul(w, Cyclotomic(1)) == w);
  // mixed conductors embed into the lcm
  CHECK(cyclo_mul(Cyclotomic::zeta(4), Cyclotomic::zeta(3)) == Cyclotomic::zeta(12, 7));
  CHECK((Cyclotomic::zeta(6) == -Cyclotomic::zeta(3, 2)));
}

TEST_CASE("galois_apply examples") {
  const Cyclotomic w = Cyclotomic::zeta(3);
  CHECK(galois_apply(w, 2) == from_coeffs(3, {-1, -1}));
  CHECK(galois_apply(Cyclotomic(Rational(7, 3), 5), 3) == Cyclotomic(Rational(7, 3)));
  // zeta^4 = -1 - zeta - zeta^2 - zeta^3 in the power basis of Q(zeta_5)
  const Cyclotomic a = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4);
  CHECK(a == from_coeffs(5, {-1, 0, -1, -1}));
  CHECK(galois_apply(a, 2) == from_coeffs(5, {0, 0, 1, 1}));
  CHECK(std::abs(galois_apply(a, 2).to_complex().real() - 2 * std::cos(4 * M_PI / 5)) < 1e-12);
  CHECK_THROWS_AS(galois_apply(Cyclotomic::zeta(6), 3), ValidationError);
}

TEST_CASE("cyclotomic text form round trips") {
  const Cyclotomic a = Cyclotomic::zeta(5, 2) - Cyclotomic::zeta(5, 1);
  CHECK(a.to_string() == "z5^2 - z5");
  CHECK(Cyclotomic::parse("z5^2 - z5") == a);
  const Cyclotomic b = Cyclotomic::zeta(3) * Rational(-1, 2) + Cyclotomic(1);
  CHECK(b.to_string() == "-1/2*z3 + 1");
  CHECK(Cyclotomic::parse(b.to_string()) == b);
  CHECK(Cyclotomic(0).to_string() == "0");
  CHECK(Cyclotomic::parse("3/2") == Cyclotomic(Rational(3, 2)));
  CHECK_THROWS_AS(Cyclotomic::parse("z5 +"), ValidationError);
  CHECK_THROWS_AS(Cyclotomic::parse(""), ValidationError);
}

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937 rng(20261018);
  for (int e : {1, 3, 4, 5, 8, 12, 15}) {
    for (int trial = 0; trial < 15; ++trial) {
      const Cyclotomic a = random_cyclotomic(rng, e);
      const Cyclotomic b = random_cyclotomic(rng, e);
      const Cyclotomic c = random_cyclotomic(rng, e);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a.conj().conj() == a);
      const Cyclotomic n = a * a.conj();
      for (long k = 1; k <= e; ++k) {
        if (gcd_l(k, e) != 1) continue;
        const auto z = n.to_complex(k);
        CHECK(std::abs(z.imag()) < 1e-9);
        CHECK(z.real() > -1e-9);
        // Galois maps are ring homomorphisms
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      }
    }
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(RatMatrix::identity(3)).empty());
  CHECK(kernel_basis(RatMatrix(2, 3)).size() == 3);
  RatMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 2;
  m(1, 1) = 2;
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng));
    const std::size_t c = static_cast<std::size_t>(dim(rng));
    RatMatrix m(r, c);
    // low rank on purpose every third trial
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(val(rng), den(rng));
    if (trial % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) {
      const auto mv = m.apply(v);
      for (const auto& x : mv) CHECK(x == 0);
    }
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("solve and echelon") {
  RatMatrix a(3, 2);
  a(0, 0) = 1;
  a(1, 1) = 2;
  a(2, 0) = 1;
  a(2, 1) = 1;
  RatMatrix x(2, 1);
  x(0, 0) = Rational(3, 2);
  x(1, 0) = -4;
  const RatMatrix b = a * x;
  CHECK(solve(a, b) == x);
  RatMatrix bad = b;
  bad(2, 0) += 1;
  CHECK_THROWS_AS(solve(a, bad), InvariantViolation);
  const auto ef = echelon(a);
  CHECK(ef.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("integer matrices detect overflow") {
  IntMatrix m(1, 1);
  m(0, 0) = std::int64_t(1) << 40;
  CHECK_THROWS_AS(m * m, InvariantViolation);
}
