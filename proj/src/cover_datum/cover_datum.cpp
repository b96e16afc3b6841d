#include "gsurf/cover_datum.hpp"

#include "gsurf/errors.hpp"

namespace gsurf {

std::vector<int> CoverDatum::generator_images() const {
  std::vector<int> out;
  for (const auto& [a, b] : handles) {
    out.push_back(a);
    out.push_back(b);
  }
  out.insert(out.end(), branch.begin(), branch.end());
  return out;
}

const char* to_string(DatumError e) {
  switch (e) {
    case DatumError::kRelationViolated:
      return "RelationViolated";
    case DatumError::kNotGenerating:
      return "NotGenerating";
    case DatumError::kTrivialBranchMonodromy:
      return "TrivialBranchMonodromy";
    case DatumError::kMalformed:
      return "Malformed";
  }
  return "Unknown";
}

DatumCheck validate(const CoverDatum& datum) {
  if (!datum.group) return {DatumError::kMalformed, "datum has no group"};
  const FiniteGroup& g = datum.g();
  if (datum.quotient_genus < 0) return {DatumError::kMalformed, "quotient genus must be non-negative"};
  if (static_cast<int>(datum.handles.size()) != datum.quotient_genus)
    return {DatumError::kMalformed, "expected " + std::to_string(datum.quotient_genus) + " handle pairs, got " +
                                        std::to_string(datum.handles.size())};
  for (int x : datum.generator_images())
    if (x < 0 || static_cast<std::size_t>(x) >= g.order())
      return {DatumError::kMalformed, "element id out of range"};
  for (std::size_t i = 0; i < datum.branch.size(); ++i)
    if (datum.branch[i] == 0)
      return {DatumError::kTrivialBranchMonodromy, "branch monodromy t" + std::to_string(i + 1) + " is the identity"};
  int prod = 0;
  for (const auto& [a, b] : datum.handles) prod = g.mul(prod, g.commutator(a, b));
  for (int x : datum.branch) prod = g.mul(prod, x);
  if (prod != 0)
    return {DatumError::kRelationViolated,
            "surface relation evaluates to " + g.element_name(prod) + " instead of the identity"};
  const auto images = datum.generator_images();
  const Subgroup span = generate_subgroup(g, images);
  if (span.order() != g.order())
    return {DatumError::kNotGenerating, "datum generates a subgroup of order " + std::to_string(span.order()) +
                                            " in a group of order " + std::to_string(g.order())};
  return {};
}

void validate_or_throw(const CoverDatum& datum) {
  const DatumCheck c = validate(datum);
  if (!c.ok()) throw ValidationError(std::string(to_string(*c.error)) + ": " + c.message);
}

long total_genus(const CoverDatum& datum) {
  const auto n = static_cast<long>(datum.g().order());
  long twice_minus = n * (2L * datum.quotient_genus - 2);  // 2g - 2
  for (int x : datum.branch) {
    const long d = datum.g().order_of(x);
    twice_minus += (n / d) * (d - 1);
  }
  require(twice_minus % 2 == 0 && twice_minus >= -2, "Riemann-Hurwitz gives a non-integral or negative genus");
  return twice_minus / 2 + 1;
}

long quotient_genus(const CoverDatum& datum, const Subgroup& n) {
  const FiniteGroup& g = datum.g();
  const auto idx = static_cast<long>(index(g, n));
  const std::vector<int> coset = right_coset_ids(g, n);
  long chi = idx * (2L - 2L * datum.quotient_genus - datum.branch_count());
  for (int x : datum.branch) {
    // orbits of <x> acting on N\G by right multiplication
    std::vector<bool> seen(static_cast<std::size_t>(idx), false);
    long orbits = 0;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const int c0 = coset[h];
      if (seen[static_cast<std::size_t>(c0)]) continue;
      ++orbits;
      int y = static_cast<int>(h);
      do {
        seen[static_cast<std::size_t>(coset[static_cast<std::size_t>(y)])] = true;
        y = g.mul(y, x);
      } while (coset[static_cast<std::size_t>(y)] != c0);
    }
    chi += orbits;
  }
  require(chi % 2 == 0 && chi <= 2, "quotient genus is not a non-negative integer");
  return (2 - chi) / 2;
}

long fixed_point_count(const CoverDatum& datum, int element) {
  if (element == 0) throw ValidationError("fixed_point_count: the identity fixes every point");
  const FiniteGroup& g = datum.g();
  long count = 0;
  for (int x : datum.branch) {
    const Subgroup cyc = generate_subgroup(g, std::vector<int>{x});
    const std::vector<int> cosets = left_coset_ids(g, cyc);
    std::vector<bool> seen(g.order() / cyc.order(), false);
    for (std::size_t c = 0; c < g.order(); ++c) {
      const int id = cosets[c];
      if (seen[static_cast<std::size_t>(id)]) continue;
      seen[static_cast<std::size_t>(id)] = true;
      if (cyc.contains(g.conjugate(element, static_cast<int>(c)))) ++count;  // c^-1 g c
    }
  }
  return count;
}

bool is_hyperelliptic_involution(const CoverDatum& datum, int z) {
  if (z < 0 || static_cast<std::size_t>(z) >= datum.g().order() || datum.g().order_of(z) != 2)
    throw ValidationError("is_hyperelliptic_involution: element is not of order 2");
  return quotient_genus(datum, generate_subgroup(datum.g(), std::vector<int>{z})) == 0;
}

GeometryReport moduli_dimension(const CoverDatum& datum) {
  GeometryReport r;
  r.total_genus = total_genus(datum);
  r.quotient_genus = datum.quotient_genus;
  r.branch_count = datum.branch_count();
  r.moduli_dimension = 3L * datum.quotient_genus - 3 + datum.branch_count();
  r.regular_euler_characteristic = 2L - 2L * datum.quotient_genus - datum.branch_count();
  r.positive_dimensional =
      r.regular_euler_characteristic < 0 && !(datum.quotient_genus == 0 && datum.branch_count() == 3);
  return r;
}

}  // namespace gsurf
