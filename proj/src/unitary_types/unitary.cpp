#include "gsurf/unitary.hpp"

#include <algorithm>

#include "gsurf/errors.hpp"

namespace gsurf {

const char* to_string(IsotypeKind k) {
  switch (k) {
    case IsotypeKind::kReal:
      return "real";
    case IsotypeKind::kComplex:
      return "complex";
    case IsotypeKind::kQuaternionic:
      return "quaternionic";
  }
  return "unknown";
}

namespace {

IsotypeKind kind_of(Indicator ind) {
  switch (ind) {
    case Indicator::kOrthogonal:
      return IsotypeKind::kReal;
    case Indicator::kSymplectic:
      return IsotypeKind::kQuaternionic;
    case Indicator::kComplex:
      return IsotypeKind::kComplex;
  }
  return IsotypeKind::kReal;
}

// Columns of m spanning its column space.
RatMatrix column_basis(const RatMatrix& m) {
  const auto cols = independent_columns(m);
  RatMatrix out(m.rows(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, cols[k]);
  return out;
}

}  // namespace

std::pair<long, long> signature(const CoverDatum& datum, const CharacterTable& table, std::size_t row) {
  if (row >= table.size()) throw ValidationError("character row out of range");
  if (table[row].indicator != Indicator::kComplex)
    throw ValidationError("signature is defined for complex-type characters only");
  return {h0_multiplicity(datum, table, row), h0_multiplicity(datum, table, table[row].dual)};
}

std::vector<Rational> rational_idempotent(const FiniteGroup& group, const CharacterTable& table,
                                          std::size_t rational_class) {
  const RationalCharacterClass& rc = table.rational_classes().at(rational_class);
  const ConjugacyData& cd = group.classes();
  const long deg = table[rc.rows.front()].degree;
  std::vector<Rational> c(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto inv_class = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(group.inv(static_cast<int>(g)))]);
    c[g] = Rational(rc.orbit_sum[inv_class] * deg) / Rational(static_cast<long>(group.order()));
  }
  return c;
}

RatMatrix group_algebra_image(const std::vector<RatMatrix>& action, const std::vector<Rational>& coeffs) {
  require(!action.empty() && action.size() == coeffs.size(), "group algebra element does not match the action");
  const std::size_t n = action.front().rows();
  RatMatrix out(n, n);
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (coeffs[g] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (action[g](i, j) != 0) out(i, j) += coeffs[g] * action[g](i, j);
  }
  return out;
}

std::size_t commutant_dimension(const std::vector<RatMatrix>& generators, std::size_t dim) {
  if (dim == 0) return 0;
  // unknown X with x_{ij} at index i*dim + j; equations A X - X A = 0
  RatMatrix eq(generators.size() * dim * dim, dim * dim);
  std::size_t row = 0;
  for (const auto& a : generators) {
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q, ++row) {
        for (std::size_t j = 0; j < dim; ++j) {
          if (a(p, j) != 0) eq(row, j * dim + q) += a(p, j);
          if (a(j, q) != 0) eq(row, p * dim + j) -= a(j, q);
        }
      }
  }
  return dim * dim - rank(eq);
}

CommutantResult commutant_oracle(const CoverHomology& hom, const FiniteGroup& group, const CharacterTable& table,
                                 std::size_t rational_class) {
  if (rational_class >= table.rational_classes().size()) throw ValidationError("rational class out of range");
  const RationalCharacterClass& rc = table.rational_classes()[rational_class];
  CommutantResult res;
  res.rational_class = rational_class;

  const RatMatrix e = group_algebra_image(hom.action, rational_idempotent(group, table, rational_class));
  require(e * e == e, "rational central idempotent is not idempotent on H^1");
  const RatMatrix w = column_basis(e);
  const std::size_t k = w.cols();
  res.block_dimension = k;

  const long deg = table[rc.rows.front()].degree;
  const auto f = static_cast<long>(rc.field_degree());
  require(static_cast<long>(k) % (deg * f) == 0, "block dimension is not a multiple of chi(1)[L:Q]");
  res.complex_multiplicity = static_cast<long>(k) / (deg * f);
  if (k == 0) return res;

  // action restricted to the block, on generators and on all elements
  std::vector<RatMatrix> block(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) block[g] = solve(w, hom.action[g] * w);
  std::vector<RatMatrix> gens;
  for (int s : group.generators()) gens.push_back(block[static_cast<std::size_t>(s)]);
  res.commutant_dimension = commutant_dimension(gens, k);

  // Schur index bounds
  res.schur_lower_bound = table[rc.rows.front()].indicator == Indicator::kSymplectic ? 2 : 1;
  long upper = res.complex_multiplicity;
  for (std::size_t b = 0; b < k; ++b) {
    RatMatrix orbit(k, group.order());
    for (std::size_t g = 0; g < group.order(); ++g)
      for (std::size_t i = 0; i < k; ++i) orbit(i, g) = block[g](i, b);
    const auto span = static_cast<long>(rank(orbit));
    require(span % (deg * f) == 0, "cyclic submodule dimension is not a multiple of chi(1)[L:Q]");
    upper = std::min(upper, span / (deg * f));
    if (upper == res.schur_lower_bound) break;
  }
  res.schur_upper_bound = upper;
  res.schur_certified = upper == res.schur_lower_bound;
  res.schur_index = upper;
  require(res.complex_multiplicity % res.schur_index == 0, "Schur index does not divide the multiplicity");
  res.rational_multiplicity = res.complex_multiplicity / res.schur_index;
  const long r2 = res.rational_multiplicity * res.rational_multiplicity;
  require(static_cast<long>(res.commutant_dimension) % r2 == 0, "commutant dimension is not divisible by r_Q^2");
  res.division_algebra_dimension = static_cast<long>(res.commutant_dimension) / r2;
  require(res.division_algebra_dimension == res.schur_index * res.schur_index * f,
          "dim D differs from s^2 [L:Q]");
  return res;
}

CommutantResult commutant_oracle(const CoverDatum& datum, const CharacterTable& table, std::size_t rational_class,
                                 std::size_t cap) {
  const CoverHomology hom = cover_homology(datum, cap);
  return commutant_oracle(hom, datum.g(), table, rational_class);
}

IsotypeReport isotype_report(const CoverDatum& datum, const CharacterTable& table, bool run_oracle, std::size_t cap) {
  validate_or_throw(datum);
  IsotypeReport rep;
  const IsotypicalVector h0 = h0_character(datum, table);
  const IsotypicalVector h1 = h1_character(datum, table);
  long weighted = 0;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (h1[r] == 0) continue;
    IsotypeEntry e;
    e.row = r;
    e.type = kind_of(table[r].indicator);
    e.multiplicity = h1[r];
    e.rational_class = table.rational_class_of(r);
    switch (e.type) {
      case IsotypeKind::kReal:
        e.rank = e.multiplicity;
        e.group = "symplectic group, " + std::to_string(e.rank) + " real variables";
        break;
      case IsotypeKind::kQuaternionic:
        require(e.multiplicity % 2 == 0, "quaternionic character with odd multiplicity in H^1");
        e.rank = e.multiplicity / 2;
        e.group = "quaternionic unitary group, " + std::to_string(e.rank) + " variables";
        break;
      case IsotypeKind::kComplex: {
        require(h1[table[r].dual] == e.multiplicity, "complex character and its dual differ in multiplicity");
        e.rank = e.multiplicity;
        e.signature = std::make_pair(h0[r], h0[table[r].dual]);
        require(e.signature->first + e.signature->second == e.rank, "signature does not add up to the rank");
        e.group = "complex unitary group, signature (" + std::to_string(e.signature->first) + "," +
                  std::to_string(e.signature->second) + ")";
        break;
      }
    }
    weighted += e.multiplicity * table[r].degree;
    rep.entries.push_back(std::move(e));
  }
  require(weighted == 2 * total_genus(datum), "H^1 multiplicities do not add up to 2g");

  std::optional<CoverHomology> hom;
  if (run_oracle) hom = cover_homology(datum, cap);
  for (std::size_t c = 0; c < table.rational_classes().size(); ++c) {
    const RationalCharacterClass& rc = table.rational_classes()[c];
    if (h1[rc.rows.front()] == 0) continue;
    // type and rank are Galois invariants
    for (std::size_t row : rc.rows) {
      require(h1[row] == h1[rc.rows.front()], "multiplicity varies along a Galois orbit");
      require(table[row].indicator == table[rc.rows.front()].indicator, "type varies along a Galois orbit");
    }
    RationalClassEntry ce;
    ce.rational_class = c;
    ce.rows = rc.rows;
    ce.field_degree = rc.field_degree();
    ce.real_subfield_degree =
        table[rc.rows.front()].indicator == Indicator::kComplex ? ce.field_degree / 2 : ce.field_degree;
    if (hom) ce.commutant = commutant_oracle(*hom, datum.g(), table, c);
    rep.classes.push_back(std::move(ce));
  }
  return rep;
}

}  // namespace gsurf
