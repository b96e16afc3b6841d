#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsurf/group.hpp"

namespace gsurf {

/// Combinatorial datum of a branched G-cover S -> S_G: images of the
/// standard generators a_j, b_j, t_i of the orbifold fundamental group of the
/// quotient. The surface relation is prod_j [a_j, b_j] * prod_i t_i = 1 with
/// [a, b] = a b a^-1 b^-1.
struct CoverDatum {
  std::shared_ptr<const FiniteGroup> group;
  int quotient_genus = 0;
  std::vector<std::pair<int, int>> handles;  // (alpha_j, beta_j)
  std::vector<int> branch;                   // x_i, all nontrivial

  const FiniteGroup& g() const { return *group; }
  int branch_count() const { return static_cast<int>(branch.size()); }
  /// Images of a1, b1, ..., ag, bg, t1, ..., tn in that order.
  std::vector<int> generator_images() const;
};

/// One letter of a word in the free generators a1, b1, ..., ag, bg, t1, ...,
/// tn of the punctured quotient. gen indexes generator_images().
struct Letter {
  int gen = 0;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

enum class DatumError { kRelationViolated, kNotGenerating, kTrivialBranchMonodromy, kMalformed };

struct DatumCheck {
  std::optional<DatumError> error;
  std::string message;
  bool ok() const { return !error.has_value(); }
};

const char* to_string(DatumError e);

DatumCheck validate(const CoverDatum& datum);
/// Throws ValidationError carrying the DatumCheck message.
void validate_or_throw(const CoverDatum& datum);

/// Riemann-Hurwitz: 2 - 2g = |G|(2 - 2gbar) - sum_Q (|G|/d_Q)(d_Q - 1).
long total_genus(const CoverDatum& datum);

/// Genus of S/N: 2 - 2g_N = [G:N](2 - 2gbar - nbar) + sum_Q #orbits(<x_Q> on N\G).
long quotient_genus(const CoverDatum& datum, const Subgroup& n);

/// Number of points of S fixed by g != 1.
long fixed_point_count(const CoverDatum& datum, int g);

/// True iff z has order 2 and S/<z> has genus 0.
bool is_hyperelliptic_involution(const CoverDatum& datum, int z);

struct GeometryReport {
  long total_genus = 0;
  int quotient_genus = 0;
  int branch_count = 0;
  long moduli_dimension = 0;         // 3 gbar - 3 + nbar
  long regular_euler_characteristic = 0;  // 2 - 2 gbar - nbar
  bool positive_dimensional = false;
};

GeometryReport moduli_dimension(const CoverDatum& datum);

}  // namespace gsurf
