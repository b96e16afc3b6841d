#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsurf/hodge.hpp"

namespace gsurf {

enum class IsotypeKind { kReal, kComplex, kQuaternionic };

const char* to_string(IsotypeKind k);

/// Result of the commutant computation on one rational isotypical block of
/// H^1(S; Q).
struct CommutantResult {
  std::size_t rational_class = 0;
  std::size_t block_dimension = 0;    // dim_Q of the block
  std::size_t commutant_dimension = 0;
  long complex_multiplicity = 0;      // m, multiplicity of each chi in the orbit
  long schur_index = 0;               // s
  long rational_multiplicity = 0;     // r_Q = m / s
  long division_algebra_dimension = 0;  // dim_Q D = commutant_dim / r_Q^2
  // s is bracketed by the real Schur index from below and by the smallest
  // cyclic submodule found from above; certified when the two agree
  long schur_lower_bound = 0;
  long schur_upper_bound = 0;
  bool schur_certified = false;
};

struct IsotypeEntry {
  std::size_t row = 0;
  IsotypeKind type = IsotypeKind::kReal;
  long multiplicity = 0;  // in H^1
  long rank = 0;
  std::string group;
  std::optional<std::pair<long, long>> signature;  // complex type only
  std::size_t rational_class = 0;
};

struct RationalClassEntry {
  std::size_t rational_class = 0;
  std::vector<std::size_t> rows;
  std::size_t field_degree = 0;  // [L_chi : Q]
  std::size_t real_subfield_degree = 0;  // [K_chi : Q] from the orbit structure
  std::optional<CommutantResult> commutant;
};

struct IsotypeReport {
  std::vector<IsotypeEntry> entries;
  std::vector<RationalClassEntry> classes;
  std::string signature_convention = "p counts occurrences of chi in H^0(Omega), q those of its dual";
};

/// One entry per character occurring in H^1. With run_oracle the commutant
/// of every occurring rational block is computed as well.
IsotypeReport isotype_report(const CoverDatum& datum, const CharacterTable& table, bool run_oracle = false,
                             std::size_t cap = kDefaultOracleCap);

/// (h0(chi), h0(chi*)) for a complex-type character; throws ValidationError
/// for a self-dual one.
std::pair<long, long> signature(const CoverDatum& datum, const CharacterTable& table, std::size_t row);

/// Rational central idempotent of a Galois orbit as coefficients per element:
/// c_g = chi(1)/|G| * sum over the orbit of chi(g^-1).
std::vector<Rational> rational_idempotent(const FiniteGroup& group, const CharacterTable& table,
                                          std::size_t rational_class);

/// Matrix of sum_g c_g rho(g).
RatMatrix group_algebra_image(const std::vector<RatMatrix>& action, const std::vector<Rational>& coeffs);

/// Dimension of the commutant of a set of square matrices.
std::size_t commutant_dimension(const std::vector<RatMatrix>& generators, std::size_t dim);

CommutantResult commutant_oracle(const CoverDatum& datum, const CharacterTable& table, std::size_t rational_class,
                                 std::size_t cap = kDefaultOracleCap);
CommutantResult commutant_oracle(const CoverHomology& hom, const FiniteGroup& group, const CharacterTable& table,
                                 std::size_t rational_class);

}  // namespace gsurf
