#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsurf/character_table.hpp"
#include "gsurf/cover_datum.hpp"
#include "gsurf/matrix.hpp"

namespace gsurf {

/// Multiplicity per character-table row.
using IsotypicalVector = std::vector<long>;

inline constexpr std::size_t kDefaultOracleCap = 24;

/// Multiplicity of exp(2 pi i j/d) as an eigenvalue of g acting in the
/// representation of `row`, d = order of g. j = 0 stands for a = 1.
long eigenvalue_multiplicity(const FiniteGroup& group, const CharacterTable& table, std::size_t row, int g, int j);

/// Multiplicity of `row` in H^0(S, Omega) by Chevalley-Weil.
long h0_multiplicity(const CoverDatum& datum, const CharacterTable& table, std::size_t row);
IsotypicalVector h0_character(const CoverDatum& datum, const CharacterTable& table);

/// Multiplicity of `row` in H^1(S; C).
long h1_multiplicity(const CoverDatum& datum, const CharacterTable& table, std::size_t row);
IsotypicalVector h1_character(const CoverDatum& datum, const CharacterTable& table);

/// H^1(S; Q) with its G-action computed from an explicit cell model: the
/// Schreier graph of the punctured quotient's free fundamental group (one
/// vertex per group element, one edge per element and free generator) with
/// the lifted boundary loops of every puncture filled in. action[g] is the
/// matrix of g in a fixed basis of cycles modulo boundaries.
struct CoverHomology {
  std::size_t dimension = 0;
  std::vector<RatMatrix> action;  // per element id
};

CoverHomology cover_homology(const CoverDatum& datum, std::size_t cap = kDefaultOracleCap);

/// Multiplicities <trace of G on H^1, chi> read off cover_homology.
IsotypicalVector h1_chain_complex_oracle(const CoverDatum& datum, const CharacterTable& table,
                                         std::size_t cap = kDefaultOracleCap);

/// Character of a G-module with the given multiplicities.
ClassFunction character_of(const CharacterTable& table, const IsotypicalVector& f);

struct Sym2Report {
  Integer orthogonal_part;  // sum over FS=+1 of C(m+1, 2)
  Integer symplectic_part;  // sum over FS=-1 of C(m, 2)
  Integer complex_part;     // sum over dual pairs of m * m*
  Integer total;
  Integer character_formula;  // (1/2|G|) sum_g (chi(g)^2 + chi(g^2))
  Integer alternating;        // dim (Lambda^2 F)^G
};

/// dim (Sym^2 F)^G two ways; throws InvariantViolation if they disagree.
Sym2Report sym2_report(const CharacterTable& table, const IsotypicalVector& f);

struct Witness {
  std::string field;
  std::optional<std::size_t> row;
  std::string detail;
};

struct EndoReport {
  bool moduli_dim_positive = false;
  bool no_central_hyperelliptic = false;
  /// Only involutions central in G are examined, not the full centralizer
  /// in the mapping class group.
  bool hyperelliptic_check_partial = true;
  bool symplectic_mult_ok = false;  // every FS=-1 constituent has mult >= 3
  bool dual_pairs_ok = false;       // every FS=0 constituent and its dual have mult >= 2
  bool hypotheses_hold = false;
  // nontrivial characters in H^0 at both thresholds, recorded separately
  bool every_nontrivial_mult_ge_2 = false;
  bool every_nontrivial_mult_ge_4 = false;
  IsotypicalVector h0;
  std::vector<Witness> witnesses;
};

EndoReport check_theorem_endo(const CoverDatum& datum, const CharacterTable& table);

struct GNConstituent {
  std::size_t row = 0;
  long multiplicity = 0;
  Rational expected;  // (g_N - 1) chi(1) / 2
  bool multiplicity_ok = false;
  bool restriction_splits = false;  // Res_N chi = psi' + psi'' with psi' != psi''
  bool induction_recovers = false;  // Ind_N^G psi' = chi
};

struct GNReport {
  bool index_two = false;
  bool acts_freely = false;
  long quotient_genus_n = 0;
  bool quotient_genus_ge_2 = false;
  bool quotient_hyperelliptic = false;  // S_G has genus 0 and every x_Q lies outside N
  bool quotient_genus_ge_4 = false;     // needed for the surjectivity clause only
  bool hypotheses_hold = false;
  bool conclusions_checked = false;
  bool conclusion_i = false;
  bool conclusion_ii = false;
  std::vector<GNConstituent> constituents;
  IsotypicalVector h0;
  std::vector<Witness> witnesses;
};

GNReport check_theorem_GN(const CoverDatum& datum, const CharacterTable& table, const Subgroup& n);

}  // namespace gsurf
