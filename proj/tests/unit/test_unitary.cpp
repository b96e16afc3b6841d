#include "doctest.h"
#include "gsurf/errors.hpp"
#include "gsurf/unitary.hpp"
#include "support/oracles.hpp"
#include "support/random_data.hpp"

using namespace gsurf;
using gsurf::testing::make_datum;
using gsurf::testing::named;

namespace {

CoverDatum free_q8() {
  const auto q8 = named("Q8");
  const int i = q8->generators()[0];
  const int j = q8->generators()[1];
  return make_datum(q8, 2, {{i, j}, {j, i}}, {});
}

const IsotypeEntry& entry_for(const IsotypeReport& rep, std::size_t row) {
  for (const auto& e : rep.entries)
    if (e.row == row) return e;
  throw std::runtime_error("row not in report");
}

}  // namespace

TEST_CASE("isotype_report examples") {
  const CoverDatum h = make_datum(named("C2"), 0, {}, std::vector<int>(6, 1));
  const auto th = CharacterTable::compute(h.g());
  const auto rh = isotype_report(h, th);
  REQUIRE(rh.entries.size() == 1);
  CHECK(rh.entries[0].type == IsotypeKind::kReal);
  CHECK(rh.entries[0].multiplicity == 4);
  CHECK(rh.entries[0].group == "symplectic group, 4 real variables");

  const CoverDatum c3 = make_datum(named("C3"), 2, {{1, 0}, {0, 0}}, {});
  const auto t3 = CharacterTable::compute(c3.g());
  const auto r3 = isotype_report(c3, t3);
  const auto& e1 = entry_for(r3, 1);
  CHECK(e1.type == IsotypeKind::kComplex);
  CHECK(e1.rank == 2);
  CHECK(e1.signature == std::make_pair(1L, 1L));
  CHECK(e1.group == "complex unitary group, signature (1,1)");

  const CoverDatum q = free_q8();
  REQUIRE(validate(q).ok());
  const auto tq = CharacterTable::compute(q.g());
  const auto& eq = entry_for(isotype_report(q, tq), 4);
  CHECK(eq.type == IsotypeKind::kQuaternionic);
  CHECK(eq.multiplicity == 4);
  CHECK(eq.rank == 2);
}

TEST_CASE("signature examples") {
  const auto c3 = named("C3");
  const auto t = CharacterTable::compute(*c3);
  CHECK(signature(make_datum(c3, 2, {{1, 0}, {0, 0}}, {}), t, 1) == std::make_pair(1L, 1L));
  const CoverDatum rigid = make_datum(c3, 0, {}, {1, 1, 1});
  const auto s1 = signature(rigid, t, 1);
  const auto s2 = signature(rigid, t, 2);
  CHECK(s1.first + s1.second == 1);
  CHECK(s2 == std::make_pair(s1.second, s1.first));
  CHECK_THROWS_AS(signature(rigid, t, 0), ValidationError);
}

TEST_CASE("commutant oracle examples") {
  const auto s3 = named("S3");
  const auto ts3 = CharacterTable::compute(*s3);
  const CoverDatum ds3 = make_datum(s3, 2, {{s3->generators()[0], 0}, {s3->generators()[1], 0}}, {});
  const auto cs3 = commutant_oracle(ds3, ts3, ts3.rational_class_of(2));
  CHECK(cs3.division_algebra_dimension == 1);
  CHECK(cs3.schur_index == 1);
  CHECK(cs3.schur_certified);
  CHECK(cs3.commutant_dimension == 16);

  const auto c3 = named("C3");
  const auto t3 = CharacterTable::compute(*c3);
  const auto cc3 = commutant_oracle(make_datum(c3, 2, {{1, 0}, {0, 0}}, {}), t3, t3.rational_class_of(1));
  CHECK(cc3.division_algebra_dimension == 2);
  CHECK(cc3.schur_index == 1);

  const CoverDatum q = free_q8();
  const auto tq = CharacterTable::compute(q.g());
  const auto cq = commutant_oracle(q, tq, tq.rational_class_of(4));
  CHECK(cq.division_algebra_dimension == 4);
  CHECK(cq.schur_index == 2);
  CHECK(cq.schur_certified);
  CHECK(cq.rational_multiplicity == 2);
}

TEST_CASE("rational idempotents are orthogonal and sum to one") {
  for (const char* name : {"C4", "S3", "Q8", "C3xS3"}) {
    const auto g = named(name);
    const auto t = CharacterTable::compute(*g);
    // regular representation matrices as the test module
    std::vector<RatMatrix> reg(g->order(), RatMatrix(g->order(), g->order()));
    for (std::size_t x = 0; x < g->order(); ++x)
      for (std::size_t y = 0; y < g->order(); ++y)
        reg[x](static_cast<std::size_t>(g->mul(static_cast<int>(x), static_cast<int>(y))), y) = 1;
    RatMatrix sum(g->order(), g->order());
    std::vector<RatMatrix> es;
    for (std::size_t c = 0; c < t.rational_classes().size(); ++c) {
      es.push_back(group_algebra_image(reg, rational_idempotent(*g, t, c)));
      sum = sum + es.back();
    }
    CHECK(sum == RatMatrix::identity(g->order()));
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = 0; b < es.size(); ++b)
        CHECK((es[a] * es[b]).is_zero() == (a != b));
  }
}

TEST_CASE("report invariants on random data") {
  for (const auto& d : gsurf::testing::random_corpus(25, 77, 2, 4, 8)) {
    const auto t = CharacterTable::compute(d.g());
    const auto rep = isotype_report(d, t, true);
    long weighted = 0;
    for (const auto& e : rep.entries) {
      weighted += e.multiplicity * t[e.row].degree;
      if (e.signature && d.branch.empty()) CHECK(e.signature->first == e.signature->second);
    }
    CHECK(weighted == 2 * total_genus(d));
    for (const auto& c : rep.classes) {
      REQUIRE(c.commutant.has_value());
      const auto& r = *c.commutant;
      CHECK(static_cast<long>(r.commutant_dimension) ==
            r.rational_multiplicity * r.rational_multiplicity * r.schur_index * r.schur_index *
                static_cast<long>(c.field_degree));
    }
  }
}
