#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsurf {

/// Permutation of {0, ..., n-1} stored as its image list.
/// Products compose left to right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t degree);

  /// Cycle notation on points 1..n, e.g. "(1 2 3)(4 5)" or "()".
  /// The degree is the larger of min_degree and the largest point mentioned.
  static Permutation parse(std::string_view cycles, std::size_t min_degree = 0);

  std::size_t degree() const { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation extended(std::size_t degree) const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

inline constexpr std::size_t kDefaultGroupCap = 2000;

/// Conjugacy classes ordered identity first, then by class size, then by
/// smallest representative id. Representatives are the smallest id in class.
struct ConjugacyData {
  std::vector<int> class_of;                 // per element
  std::vector<int> representatives;          // per class
  std::vector<std::size_t> sizes;            // per class
  std::vector<std::vector<int>> members;     // per class, sorted ids
  std::vector<int> inverse_class;            // class of g^-1
  std::vector<int> element_order;            // order of representatives
  /// power_map[k][c] = class of rep(c)^k for 0 <= k <= exponent.
  std::vector<std::vector<int>> power_map;

  std::size_t count() const { return representatives.size(); }
};

/// Explicit finite group with full multiplication table. Element 0 is the
/// identity; other ids follow breadth-first order from the identity over the
/// generators (right multiplication).
class FiniteGroup {
 public:
  static FiniteGroup from_generators(std::span<const Permutation> generators,
                                     std::size_t cap = kDefaultGroupCap);
  /// From a Cayley table (row a, column b holds a*b); element 0 must be the
  /// identity. Generators are optional and default to all elements.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<int> generators = {});

  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long k) const;
  int conjugate(int g, int by) const { return mul(mul(inv(by), g), by); }  // by^-1 g by
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }  // a b a^-1 b^-1
  int order_of(int a) const { return orders_[static_cast<std::size_t>(a)]; }
  int exponent() const { return exponent_; }

  const std::vector<int>& generators() const { return generators_; }
  const ConjugacyData& classes() const { return classes_; }

  /// Source permutations when built from generators.
  const std::vector<Permutation>& permutations() const { return perms_; }
  /// Id of a permutation (extended to the group's degree), if it belongs to the group.
  std::optional<int> find(const Permutation& p) const;

  std::string element_name(int id) const;

 private:
  void finish();

  std::size_t order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> generators_;
  std::vector<Permutation> perms_;
  int exponent_ = 1;
  ConjugacyData classes_;
};

/// A subgroup as a sorted list of element ids of its ambient group.
struct Subgroup {
  std::vector<int> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup generate_subgroup(const FiniteGroup& group, std::span<const int> generators);
Subgroup whole_group(const FiniteGroup& group);
Subgroup trivial_subgroup();
bool is_normal(const FiniteGroup& group, const Subgroup& h);
std::size_t index(const FiniteGroup& group, const Subgroup& h);

/// Right cosets H g: coset id per element, ids numbered by smallest member.
std::vector<int> right_coset_ids(const FiniteGroup& group, const Subgroup& h);
/// Left cosets g H: coset id per element, ids numbered by smallest member.
std::vector<int> left_coset_ids(const FiniteGroup& group, const Subgroup& h);

Subgroup center(const FiniteGroup& group);
std::vector<int> central_involutions(const FiniteGroup& group);

/// A subgroup re-presented as a standalone FiniteGroup. embedding[i] is the
/// ambient id of the subgroup's element i.
struct SubgroupAsGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> embedding;
  std::vector<int> restriction;  // ambient id -> subgroup id, or -1
};

SubgroupAsGroup subgroup_as_group(const FiniteGroup& ambient, const Subgroup& h);

/// Small named groups as permutation groups: "C<n>", "D<n>" (order 2n),
/// "Q8", "Q<4n>" (dicyclic), "S<n>", "A<n>", "C2xC2" style direct products of
/// named factors, "trivial".
std::vector<Permutation> named_group_generators(std::string_view name);

}  // namespace gsurf
