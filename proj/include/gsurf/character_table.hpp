#pragma once

#include <cstddef>
#include <vector>

#include "gsurf/cyclotomic.hpp"
#include "gsurf/group.hpp"

namespace gsurf {

/// Values indexed by conjugacy class of the owning group.
using ClassFunction = std::vector<Cyclotomic>;

enum class Indicator : int { kComplex = 0, kOrthogonal = 1, kSymplectic = -1 };

struct IrreducibleCharacter {
  ClassFunction values;
  long degree = 0;
  Indicator indicator = Indicator::kOrthogonal;
  std::size_t dual = 0;  // row of the complex conjugate character
};

/// One Galois orbit of irreducible characters and its orbit sum.
struct RationalCharacterClass {
  std::vector<std::size_t> rows;
  std::vector<Integer> orbit_sum;  // per class
  std::size_t field_degree() const { return rows.size(); }
};

/// Exact complex character table. Rows are sorted by degree, the trivial
/// character first, remaining ties broken by value tuple.
class CharacterTable {
 public:
  /// Burnside-Dixon: simultaneous eigenvectors of the class matrices over
  /// F_p for the least prime p = 1 mod exponent with p > 2|G|, lifted to
  /// cyclotomic values through eigenvalue multiplicities of each class.
  static CharacterTable compute(const FiniteGroup& group);

  std::size_t group_order() const { return group_order_; }
  int exponent() const { return exponent_; }
  std::size_t size() const { return rows_.size(); }
  const IrreducibleCharacter& operator[](std::size_t row) const { return rows_[row]; }
  const std::vector<IrreducibleCharacter>& rows() const { return rows_; }
  const ConjugacyData& classes() const { return classes_; }
  const std::vector<RationalCharacterClass>& rational_classes() const { return rational_; }
  /// Index into rational_classes() of the orbit containing row.
  std::size_t rational_class_of(std::size_t row) const { return rational_of_[row]; }
  bool is_trivial(std::size_t row) const { return row == 0; }
  /// The prime used by the Dixon reduction.
  long dixon_prime() const { return prime_; }

  /// <f1, f2> = 1/|G| sum_g f1(g) conj(f2(g)).
  Cyclotomic inner_product(const ClassFunction& f1, const ClassFunction& f2) const;
  /// Multiplicities of each row in a class function; throws if any is not a
  /// non-negative integer.
  std::vector<long> decompose(const ClassFunction& f) const;
  ClassFunction combination(const std::vector<long>& multiplicities) const;
  ClassFunction regular_character() const;

 private:
  std::size_t group_order_ = 0;
  int exponent_ = 1;
  long prime_ = 0;
  ConjugacyData classes_;
  std::vector<IrreducibleCharacter> rows_;
  std::vector<RationalCharacterClass> rational_;
  std::vector<std::size_t> rational_of_;
};

/// (1/|G|) sum_g chi(g^2), via the power maps; exactly +1, -1 or 0.
Indicator fs_indicator(const CharacterTable& table, std::size_t row);
int indicator_value(Indicator ind);

/// Value of a class function at an element.
inline const Cyclotomic& value_at(const ClassFunction& f, const FiniteGroup& g, int element) {
  return f[static_cast<std::size_t>(g.classes().class_of[static_cast<std::size_t>(element)])];
}

/// Induction from a subgroup. psi_by_element holds psi(h) for every h in
/// h.elements (same order). Throws ValidationError if psi is not a class
/// function of the subgroup.
ClassFunction induce_character(const FiniteGroup& group, const Subgroup& h,
                               const std::vector<Cyclotomic>& psi_by_element);

/// Restriction of a class function of `group` to the elements of h, in
/// h.elements order.
std::vector<Cyclotomic> restrict_character(const FiniteGroup& group, const Subgroup& h, const ClassFunction& f);

}  // namespace gsurf
