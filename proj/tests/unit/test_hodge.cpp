#include <random>

#include "doctest.h"
#include "gsurf/errors.hpp"
#include "gsurf/hodge.hpp"
#include "support/oracles.hpp"
#include "support/random_data.hpp"

using namespace gsurf;
using gsurf::testing::make_datum;
using gsurf::testing::named;

namespace {

CoverDatum hyperelliptic_c2() { return make_datum(named("C2"), 0, {}, std::vector<int>(6, 1)); }
CoverDatum free_c3() { return make_datum(named("C3"), 2, {{1, 0}, {0, 0}}, {}); }

// eigenvalue count straight from a diagonalized generator: for a cyclic
// group with chi(g) = zeta_d^k the only eigenvalue is zeta^k
long cyclic_eigen_count(int d, int k, int j) { return (k - j) % d == 0 ? 1 : 0; }

}  // namespace

TEST_CASE("eigenvalue_multiplicity examples") {
  const auto c2 = named("C2");
  const auto t = CharacterTable::compute(*c2);
  CHECK(eigenvalue_multiplicity(*c2, t, 0, 1, 0) == 1);
  CHECK(eigenvalue_multiplicity(*c2, t, 1, 1, 1) == 1);
  CHECK(eigenvalue_multiplicity(*c2, t, 1, 1, 0) == 0);

  const auto c5 = named("C5");
  const auto t5 = CharacterTable::compute(*c5);
  const int g = c5->generators()[0];
  for (std::size_t r = 0; r < t5.size(); ++r) {
    // find k with chi(g) = zeta_5^k
    int k = -1;
    for (int e = 0; e < 5; ++e)
      if (value_at(t5[r].values, *c5, g) == Cyclotomic::zeta(5, e)) k = e;
    REQUIRE(k >= 0);
    for (int j = 0; j < 5; ++j) CHECK(eigenvalue_multiplicity(*c5, t5, r, g, j) == cyclic_eigen_count(5, k, j));
  }
}

TEST_CASE("h0_multiplicity examples") {
  const auto triv = named("trivial");
  const auto tt = CharacterTable::compute(*triv);
  CHECK(h0_multiplicity(make_datum(triv, 2, {{0, 0}, {0, 0}}, {}), tt, 0) == 2);
  const CoverDatum h = hyperelliptic_c2();
  const auto t2 = CharacterTable::compute(h.g());
  CHECK(h0_multiplicity(h, t2, 1) == 2);
  const CoverDatum f = free_c3();
  const auto t3 = CharacterTable::compute(f.g());
  CHECK(h0_multiplicity(f, t3, 1) == 1);
  CHECK(h0_multiplicity(f, t3, 2) == 1);
}

TEST_CASE("h0_character examples") {
  const CoverDatum f = free_c3();
  CHECK(h0_character(f, CharacterTable::compute(f.g())) == IsotypicalVector{2, 1, 1});
  const auto triv = named("trivial");
  CHECK(h0_character(make_datum(triv, 3, {{0, 0}, {0, 0}, {0, 0}}, {}), CharacterTable::compute(*triv)) ==
        IsotypicalVector{3});
  const CoverDatum h = hyperelliptic_c2();
  CHECK(h0_character(h, CharacterTable::compute(h.g())) == IsotypicalVector{0, 2});
}

TEST_CASE("h1_multiplicity examples") {
  const CoverDatum f = free_c3();
  const auto t3 = CharacterTable::compute(f.g());
  CHECK(h1_multiplicity(f, t3, 1) == 2);
  CHECK(h1_multiplicity(f, t3, 0) == 4);
  const CoverDatum h = hyperelliptic_c2();
  CHECK(h1_multiplicity(h, CharacterTable::compute(h.g()), 1) == 4);
  const auto s3 = named("S3");
  const auto ts3 = CharacterTable::compute(*s3);
  const CoverDatum free_s3 =
      make_datum(s3, 2, {{s3->generators()[0], 0}, {s3->generators()[1], 0}}, {});
  REQUIRE(validate(free_s3).ok());
  CHECK(h1_multiplicity(free_s3, ts3, 2) == 2 * (2 - 1) * 2);
}

TEST_CASE("chain-complex oracle examples") {
  const auto triv = named("trivial");
  CHECK(h1_chain_complex_oracle(make_datum(triv, 2, {{0, 0}, {0, 0}}, {}), CharacterTable::compute(*triv)) ==
        IsotypicalVector{4});
  const CoverDatum f = free_c3();
  CHECK(h1_chain_complex_oracle(f, CharacterTable::compute(f.g())) == IsotypicalVector{4, 2, 2});
  const CoverDatum h = hyperelliptic_c2();
  CHECK(h1_chain_complex_oracle(h, CharacterTable::compute(h.g())) == IsotypicalVector{0, 4});
  const auto s5 = named("S5");
  CHECK_THROWS_AS(cover_homology(make_datum(s5, 2, {{s5->generators()[0], 0}, {s5->generators()[1], 0}}, {})),
                  CapExceeded);
}

TEST_CASE("cover homology is a representation") {
  const CoverDatum h = hyperelliptic_c2();
  const CoverHomology hom = cover_homology(h);
  CHECK(hom.dimension == 4);
  CHECK(hom.action[1] == RatMatrix::identity(4) - RatMatrix::identity(4) - RatMatrix::identity(4));
  const auto s3 = named("S3");
  const int t = *s3->find(Permutation::parse("(1 2)"));
  const int u = *s3->find(Permutation::parse("(2 3)"));
  const CoverDatum d = make_datum(s3, 0, {}, {t, t, u, u});
  const CoverHomology hs = cover_homology(d);
  CHECK(hs.dimension == static_cast<std::size_t>(2 * total_genus(d)));
  for (std::size_t a = 0; a < s3->order(); ++a)
    for (std::size_t b = 0; b < s3->order(); ++b)
      CHECK(hs.action[a] * hs.action[b] ==
            hs.action[static_cast<std::size_t>(s3->mul(static_cast<int>(a), static_cast<int>(b)))]);
}

TEST_CASE("Chevalley-Weil totals, duality and oracle agreement on random data") {
  const auto corpus = gsurf::testing::random_corpus(60, 2026);
  for (const auto& d : corpus) {
    const auto t = CharacterTable::compute(d.g());
    const IsotypicalVector h0 = h0_character(d, t);
    const IsotypicalVector h1 = h1_character(d, t);
    long total = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
      total += t[r].degree * h0[r];
      CHECK(h1[r] == h0[r] + h0[t[r].dual]);
      if (d.branch.empty()) CHECK(h0[r] == h0[t[r].dual]);
    }
    CHECK(total == total_genus(d));
    if (d.g().order() <= 12 && d.quotient_genus <= 3) CHECK(h1_chain_complex_oracle(d, t) == h1);
  }
}

TEST_CASE("sym2_report examples") {
  const auto q8 = named("Q8");
  const auto tq = CharacterTable::compute(*q8);
  IsotypicalVector f(tq.size(), 0);
  f[4] = 1;
  const Sym2Report r = sym2_report(tq, f);
  CHECK(r.total == 0);
  CHECK(r.alternating == 1);
  const auto c3 = named("C3");
  const auto t3 = CharacterTable::compute(*c3);
  for (long m = 0; m < 5; ++m) CHECK(sym2_report(t3, {m, 0, 0}).total == binomial(m + 1, 2));
  const Sym2Report pair = sym2_report(t3, {0, 1, 1});
  CHECK(pair.total == 1);
  CHECK(pair.complex_part == 1);
}

TEST_CASE("sym2_report agrees with the character formula on random vectors") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> mult(0, 5);
  for (const char* name : {"C4", "S3", "Q8", "D4", "A4", "C3xS3", "Q12"}) {
    const auto t = CharacterTable::compute(*named(name));
    for (int trial = 0; trial < 10; ++trial) {
      IsotypicalVector f(t.size());
      for (auto& m : f) m = mult(rng);
      CHECK_NOTHROW(sym2_report(t, f));
    }
  }
}

TEST_CASE("check_theorem_endo examples") {
  const CoverDatum h = hyperelliptic_c2();
  const auto rep = check_theorem_endo(h, CharacterTable::compute(h.g()));
  CHECK_FALSE(rep.no_central_hyperelliptic);
  CHECK(rep.hyperelliptic_check_partial);
  CHECK_FALSE(rep.witnesses.empty());

  const auto c3 = named("C3");
  const CoverDatum tri = make_datum(c3, 0, {}, {1, 1, 1});
  const auto r03 = check_theorem_endo(tri, CharacterTable::compute(*c3));
  CHECK_FALSE(r03.moduli_dim_positive);

  // free C2 action over genus 3: degree-1 sign appears exactly twice
  const auto c2 = named("C2");
  const CoverDatum f3 = make_datum(c2, 3, {{1, 0}, {0, 0}, {0, 0}}, {});
  const auto r3 = check_theorem_endo(f3, CharacterTable::compute(*c2));
  CHECK(r3.symplectic_mult_ok);
  CHECK(r3.dual_pairs_ok);
  CHECK(r3.every_nontrivial_mult_ge_2);
  CHECK_FALSE(r3.every_nontrivial_mult_ge_4);

  for (const auto& d : gsurf::testing::random_corpus(80, 31, 4, 4)) {
    if (d.quotient_genus < 3) continue;
    const auto r = check_theorem_endo(d, CharacterTable::compute(d.g()));
    CHECK(r.symplectic_mult_ok);
    CHECK(r.dual_pairs_ok);
    CHECK(r.every_nontrivial_mult_ge_2);
  }
}

TEST_CASE("check_theorem_GN hypotheses") {
  const auto v4 = named("C2xC2");
  const int z = v4->generators()[0];
  const int n = v4->generators()[1];
  const int zn = v4->mul(z, n);
  const CoverDatum d = make_datum(v4, 0, {}, {z, z, z, z, zn, zn});
  const auto t = CharacterTable::compute(*v4);
  const auto whole = check_theorem_GN(d, t, whole_group(*v4));
  CHECK_FALSE(whole.index_two);
  CHECK_FALSE(whole.hypotheses_hold);
  CHECK_FALSE(whole.conclusions_checked);

  const auto rep = check_theorem_GN(d, t, generate_subgroup(*v4, std::vector<int>{n}));
  CHECK(rep.index_two);
  CHECK(rep.acts_freely);
  CHECK(rep.quotient_genus_n == 2);
  CHECK(rep.quotient_hyperelliptic);
  REQUIRE(rep.hypotheses_hold);
  // (i) holds: the sign of G/N occurs g(C_N) = 2 times
  CHECK(rep.conclusion_i);

  // S3 over a genus 0 quotient branched only at transpositions, N = A3
  const auto s3 = named("S3");
  const int a = *s3->find(Permutation::parse("(1 2)"));
  const int b = *s3->find(Permutation::parse("(2 3)"));
  const CoverDatum ds = make_datum(s3, 0, {}, {a, a, a, a, b, b});
  REQUIRE(validate(ds).ok());
  const auto ts = CharacterTable::compute(*s3);
  const auto rs = check_theorem_GN(ds, ts, generate_subgroup(*s3, std::vector<int>{s3->mul(a, b)}));
  REQUIRE(rs.hypotheses_hold);
  CHECK(rs.conclusion_i);
  CHECK(rs.conclusion_ii);
}
