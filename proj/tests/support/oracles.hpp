#pragma once

// Independent checks used by the unit and acceptance suites. Nothing here
// calls into the code paths it verifies.

#include <string>
#include <vector>

#include "gsurf/character_table.hpp"
#include "gsurf/cover_datum.hpp"

namespace gsurf::testing {

inline std::shared_ptr<const FiniteGroup> named(const std::string& name) {
  const auto gens = named_group_generators(name);
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_generators(gens));
}

/// Class-algebra check by brute force: for every row and classes j, k,
/// w(C_j) w(C_k) = sum_l c_jk^l w(C_l) with w(C) = |C| chi(g_C) / chi(1) and
/// c_jk^l counted directly from the multiplication table.
inline bool class_algebra_holds(const FiniteGroup& g, const CharacterTable& t) {
  const auto& cd = g.classes();
  const std::size_t k = cd.count();
  std::vector<std::vector<std::vector<long>>> c(k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const int z = cd.representatives[l];
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y)
        if (g.mul(static_cast<int>(x), static_cast<int>(y)) == z)
          ++c[static_cast<std::size_t>(cd.class_of[x])][static_cast<std::size_t>(cd.class_of[y])][l];
  }
  for (const auto& row : t.rows()) {
    std::vector<Cyclotomic> w(k);
    for (std::size_t j = 0; j < k; ++j)
      w[j] = row.values[j] * Rational(static_cast<long>(cd.sizes[j]), row.degree);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        Cyclotomic rhs;
        for (std::size_t l = 0; l < k; ++l)
          if (c[a][b][l] != 0) rhs += w[l] * Rational(c[a][b][l]);
        if (w[a] * w[b] != rhs) return false;
      }
  }
  return true;
}

/// Degrees in table order.
inline std::vector<long> degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (const auto& r : t.rows()) d.push_back(r.degree);
  return d;
}

/// Id of the element reached by a word in the group's permutation generators
/// (1-based generator index, negative for inverse).
inline int word(const FiniteGroup& g, std::initializer_list<int> letters) {
  int x = 0;
  for (int l : letters) {
    const int s = g.generators()[static_cast<std::size_t>(std::abs(l) - 1)];
    x = g.mul(x, l > 0 ? s : g.inv(s));
  }
  return x;
}

}  // namespace gsurf::testing
