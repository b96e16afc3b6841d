#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsurf/cover_datum.hpp"
#include "gsurf/matrix.hpp"
#include "gsurf/unitary.hpp"

namespace gsurf {

inline constexpr std::size_t kDefaultTopologyCap = 64;

using IntVector = std::vector<std::int64_t>;

/// A word naming a closed curve on the punctured quotient. Embeddedness is
/// the caller's assertion and is never verified.
struct CurveSpec {
  std::string name;
  std::vector<Letter> word;
  bool asserted_simple = true;
};

/// Parses "a1 b2^-1 t1" against a datum with the given quotient genus and
/// branch count; the result is freely reduced and must be nonempty.
CurveSpec parse_curve(std::string_view text, int quotient_genus, int branch_count, std::string name = {});
std::string to_string(const std::vector<Letter>& word, int quotient_genus);

/// Cell model of the cover: one vertex per group element over the base
/// vertex of the one-vertex ribbon graph, one edge per element and free
/// generator, and faces the lifts of the surface relation (one per element)
/// and of t_i^-d_i (one per coset of <x_i>). H_1 is taken in the tree-cotree
/// basis, which is integral.
class CoverModel {
 public:
  static CoverModel build(const CoverDatum& datum, std::size_t cap = kDefaultTopologyCap);

  const CoverDatum& datum() const { return datum_; }
  const FiniteGroup& group() const { return datum_.g(); }
  long genus() const { return genus_; }
  std::size_t rank() const { return basis_edges_.size(); }
  std::size_t vertex_count() const { return group().order(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t face_count() const { return faces_.size(); }

  /// Omega(i, j) = <e_i, e_j>.
  const IntMatrix& form() const { return form_; }
  /// Integral matrix of each group element on H_1 (columns are images).
  const IntMatrix& action(int g) const { return action_[static_cast<std::size_t>(g)]; }
  const std::vector<IntMatrix>& actions() const { return action_; }
  std::vector<RatMatrix> rational_actions() const;

  std::int64_t pairing(const IntVector& x, const IntVector& y) const;

  /// Edge chain of the lift of a word starting at the vertex of element h.
  IntVector lift_chain(int h, const std::vector<Letter>& word) const;
  /// Class in H_1 of an edge cycle.
  IntVector homology_class(const IntVector& cycle) const;

 private:
  struct Step {
    std::size_t edge;
    int sign;
  };
  using Walk = std::vector<Step>;

  std::size_t edge(std::size_t h, std::size_t s) const { return h * generators_ + s; }
  std::size_t head(std::size_t e) const;
  Walk lift_walk(std::size_t h, const std::vector<Letter>& word) const;
  Walk tree_path(std::size_t from, std::size_t to) const;
  IntVector chain_of(const Walk& w) const;
  IntVector pushoff_cochain(const Walk& w) const;

  CoverDatum datum_;
  std::vector<int> images_;
  std::size_t generators_ = 0;
  std::size_t edge_count_ = 0;
  long genus_ = 0;
  std::vector<Walk> faces_;
  std::vector<std::size_t> next_ccw_;  // dart -> next dart counterclockwise at its vertex
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::vector<Step> parent_step_;  // step from parent down to the vertex
  std::vector<bool> in_tree_;
  std::vector<std::size_t> cotree_order_;   // faces in dual BFS order, root excluded
  std::vector<std::size_t> cotree_edge_;    // per face: edge to its dual parent
  std::vector<std::size_t> basis_edges_;
  std::vector<IntVector> face_chains_;
  IntMatrix form_;
  std::vector<IntMatrix> action_;
};

/// The G-orbit of lifts of a curve.
struct MultiTwistOrbit {
  CurveSpec curve;
  int monodromy = 0;  // p(w)
  int degree = 0;     // order of p(w)
  std::vector<int> component_starts;  // smallest element of each coset h<p(w)>
  std::vector<IntVector> classes;     // per component
};

/// Lifts a curve; throws ValidationError when the component classes are not
/// pairwise orthogonal.
MultiTwistOrbit lift_curve(const CoverModel& model, const CurveSpec& curve);

/// T(x) = x + sum_alpha <x, alpha> alpha.
IntMatrix transvection(const CoverModel& model, const MultiTwistOrbit& orbit);

struct IsotypicalImage {
  bool nonzero = false;
  std::vector<RatVector> projections;  // e_[chi] applied to each class
};

IsotypicalImage isotypical_image_test(const CoverModel& model, const CharacterTable& table,
                                      const MultiTwistOrbit& orbit, std::size_t rational_class);

struct TwistCertificate {
  std::string verdict;  // "irreducible" or "inconclusive"
  std::size_t rational_class = 0;
  std::size_t block_dimension = 0;
  std::size_t algebra_dimension = 0;    // algebra generated by G and the twists on the block
  std::size_t commutant_dimension = 0;  // of that algebra
  long division_algebra_dimension = 0;  // dim_Q D
  std::vector<std::string> caveats;
};

TwistCertificate twist_algebra_certificate(const CoverModel& model, const CharacterTable& table,
                                           const std::vector<CurveSpec>& curves, std::size_t rational_class);

}  // namespace gsurf
