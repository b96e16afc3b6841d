#include <algorithm>

#include "doctest.h"
#include "gsurf/character_table.hpp"
#include "gsurf/errors.hpp"
#include "support/oracles.hpp"

using namespace gsurf;
using gsurf::testing::named;

TEST_CASE("group_from_generators examples") {
  const std::vector<Permutation> c2{Permutation::parse("(1 2)")};
  CHECK(FiniteGroup::from_generators(c2).order() == 2);
  const std::vector<Permutation> s3{Permutation::parse("(1 2 3)"), Permutation::parse("(1 2)")};
  const FiniteGroup g = FiniteGroup::from_generators(s3);
  CHECK(g.order() == 6);
  CHECK(g.classes().count() == 3);
  CHECK(g.classes().sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(FiniteGroup::from_generators({}).order() == 1);
  const std::vector<Permutation> s5{Permutation::parse("(1 2 3 4 5)"), Permutation::parse("(1 2)")};
  CHECK_THROWS_AS(FiniteGroup::from_generators(s5, 100), CapExceeded);
}

TEST_CASE("group tables satisfy the group axioms") {
  for (const char* name : {"C5", "D4", "Q8", "A4", "S4", "Q16", "C2xC4"}) {
    const auto g = named(name);
    const std::size_t n = g->order();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(g->mul(static_cast<int>(a), g->inv(static_cast<int>(a))) == 0);
      CHECK(g->mul(0, static_cast<int>(a)) == static_cast<int>(a));
      for (std::size_t b = 0; b < n; b += 3)
        for (std::size_t c = 0; c < n; c += 5)
          CHECK(g->mul(g->mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) ==
                g->mul(static_cast<int>(a), g->mul(static_cast<int>(b), static_cast<int>(c))));
    }
    std::size_t total = 0;
    for (auto s : g->classes().sizes) {
      CHECK(n % s == 0);
      total += s;
    }
    CHECK(total == n);
  }
}

TEST_CASE("named groups have the expected orders") {
  CHECK(named("Q8")->order() == 8);
  CHECK(named("Q16")->order() == 16);
  CHECK(named("D6")->order() == 12);
  CHECK(named("A5")->order() == 60);
  CHECK(named("C2xC2xC2")->order() == 8);
  CHECK(named("trivial")->order() == 1);
  CHECK_THROWS_AS(named_group_generators("X7"), ValidationError);
}

TEST_CASE("character_table examples") {
  const auto c2 = named("C2");
  const auto t2 = CharacterTable::compute(*c2);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].values == ClassFunction{Cyclotomic(1), Cyclotomic(1)});
  CHECK(t2[1].values == ClassFunction{Cyclotomic(1), Cyclotomic(-1)});

  const auto s3 = named("S3");
  const auto ts3 = CharacterTable::compute(*s3);
  CHECK(gsurf::testing::degrees(ts3) == std::vector<long>{1, 1, 2});
  CHECK(gsurf::testing::class_algebra_holds(*s3, ts3));

  const auto q8 = named("Q8");
  const auto tq8 = CharacterTable::compute(*q8);
  CHECK(gsurf::testing::degrees(tq8) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(gsurf::testing::class_algebra_holds(*q8, tq8));
}

TEST_CASE("Dixon prime is the least admissible prime") {
  const auto a5 = named("A5");
  const auto t = CharacterTable::compute(*a5);
  CHECK(a5->exponent() == 30);
  CHECK(t.dixon_prime() == 151);
  CHECK(gsurf::testing::degrees(t) == std::vector<long>{1, 3, 3, 4, 5});
}

TEST_CASE("fs_indicator examples") {
  const auto tq8 = CharacterTable::compute(*named("Q8"));
  CHECK(fs_indicator(tq8, 0) == Indicator::kOrthogonal);
  CHECK(fs_indicator(tq8, 4) == Indicator::kSymplectic);
  const auto tc3 = CharacterTable::compute(*named("C3"));
  CHECK(fs_indicator(tc3, 1) == Indicator::kComplex);
  CHECK(fs_indicator(tc3, 2) == Indicator::kComplex);
  CHECK(tc3[1].dual == 2);
  CHECK(tc3[2].dual == 1);
}

TEST_CASE("table invariants across a family of groups") {
  for (const char* name : {"C1", "C4", "C6", "C2xC2", "D4", "D5", "Q8", "Q12", "A4", "S4", "C3xS3", "Q16", "C2xQ8"}) {
    CAPTURE(name);
    const auto g = named(name);
    const auto t = CharacterTable::compute(*g);
    CHECK(t.size() == g->classes().count());
    CHECK(gsurf::testing::class_algebra_holds(*g, t));
    const ClassFunction reg = t.regular_character();
    for (std::size_t r = 0; r < t.size(); ++r) {
      CHECK(t.inner_product(reg, t[r].values) == Cyclotomic(t[r].degree));
      CHECK(t[t[r].dual].dual == r);
      bool real_valued = true;
      for (const auto& v : t[r].values)
        if (v != v.conj()) real_valued = false;
      CHECK((t[r].indicator == Indicator::kComplex) == !real_valued);
      CHECK((t[r].indicator == Indicator::kComplex) == (t[r].dual != r));
    }
    std::size_t covered = 0;
    for (const auto& rc : t.rational_classes()) {
      covered += rc.rows.size();
      // orbit closed under every Galois map
      for (long k = 1; k <= g->exponent(); ++k) {
        if (gcd_l(k, g->exponent()) != 1) continue;
        for (auto row : rc.rows) {
          ClassFunction img;
          for (const auto& v : t[row].values) img.push_back(v.galois(k));
          bool found = false;
          for (auto other : rc.rows) found = found || t[other].values == img;
          CHECK(found);
        }
      }
    }
    CHECK(covered == t.size());
  }
}

TEST_CASE("induce_character examples") {
  const auto s3 = named("S3");
  const auto t = CharacterTable::compute(*s3);
  // trivial subgroup: regular character
  CHECK(induce_character(*s3, trivial_subgroup(), {Cyclotomic(1)}) == t.regular_character());

  const int tau = *s3->find(Permutation::parse("(1 2)"));
  const Subgroup h = generate_subgroup(*s3, std::vector<int>{tau});
  std::vector<Cyclotomic> sign;
  for (int x : h.elements) sign.emplace_back(x == 0 ? 1 : -1);
  const ClassFunction ind = induce_character(*s3, h, sign);
  CHECK(ind[0] == Cyclotomic(3));
  CHECK(t.decompose(ind) == std::vector<long>{0, 1, 1});

  // Frobenius reciprocity against every irreducible of G
  for (std::size_t r = 0; r < t.size(); ++r) {
    const auto res = restrict_character(*s3, h, t[r].values);
    Cyclotomic lhs = t.inner_product(ind, t[r].values);
    Cyclotomic rhs;
    for (std::size_t i = 0; i < h.order(); ++i) rhs += res[i] * sign[i].conj();
    rhs /= Rational(static_cast<long>(h.order()));
    CHECK(lhs == rhs);
  }

  std::vector<Cyclotomic> not_class_fn{Cyclotomic(1), Cyclotomic(2), Cyclotomic(3)};
  const Subgroup c3 = generate_subgroup(*s3, std::vector<int>{*s3->find(Permutation::parse("(1 2 3)"))});
  CHECK_NOTHROW(induce_character(*s3, c3, {Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}));
  const Subgroup whole = whole_group(*s3);
  std::vector<Cyclotomic> bad(6, Cyclotomic(0));
  bad[static_cast<std::size_t>(tau)] = Cyclotomic(1);
  CHECK_THROWS_AS(induce_character(*s3, whole, bad), ValidationError);
}

TEST_CASE("center and central involutions") {
  const auto q8 = named("Q8");
  CHECK(center(*q8).order() == 2);
  CHECK(central_involutions(*q8).size() == 1);
  const auto s3 = named("S3");
  CHECK(center(*s3).order() == 1);
  CHECK(central_involutions(*s3).empty());
  const auto ab = named("C2xC4");
  CHECK(center(*ab).order() == ab->order());
  CHECK(central_involutions(*ab).size() == 3);
}

TEST_CASE("subgroups re-presented as groups") {
  const auto d4 = named("D4");
  const int r = d4->generators()[0];
  const Subgroup c4 = generate_subgroup(*d4, std::vector<int>{r});
  CHECK(c4.order() == 4);
  CHECK(is_normal(*d4, c4));
  CHECK(index(*d4, c4) == 2);
  const auto sub = subgroup_as_group(*d4, c4);
  CHECK(sub.group->order() == 4);
  CHECK(sub.group->classes().count() == 4);
  const auto t = CharacterTable::compute(*sub.group);
  CHECK(t.size() == 4);
  const int s = d4->generators()[1];
  CHECK_FALSE(is_normal(*d4, generate_subgroup(*d4, std::vector<int>{s})));
}
