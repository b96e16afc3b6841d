#pragma once

// Deterministic sampler of valid covering data over small groups.

#include <random>
#include <string>
#include <vector>

#include "gsurf/cover_datum.hpp"
#include "support/oracles.hpp"

namespace gsurf::testing {

inline CoverDatum make_datum(std::shared_ptr<const FiniteGroup> g, int gbar, std::vector<std::pair<int, int>> handles,
                             std::vector<int> branch) {
  CoverDatum d;
  d.group = std::move(g);
  d.quotient_genus = gbar;
  d.handles = std::move(handles);
  d.branch = std::move(branch);
  return d;
}

inline const std::vector<std::string>& small_group_names() {
  static const std::vector<std::string> names{"C2",   "C3",    "C4",      "C5",   "C6",   "C2xC2", "S3",
                                              "C7",   "C8",    "C2xC4",   "D4",   "Q8",   "C2xC2xC2", "C3xC3",
                                              "D5",   "C10",   "A4",      "D6",   "Q12",  "C2xC6", "D7",
                                              "C4xC4", "D8",   "Q16",     "C2xD4", "C2xQ8"};
  return names;
}

/// Samples valid data with gbar <= max_gbar and nbar <= max_nbar. The last
/// branch monodromy is solved from the surface relation; data failing any
/// validity condition are redrawn.
inline std::vector<CoverDatum> random_corpus(std::size_t count, unsigned seed, int max_gbar = 4, int max_nbar = 6,
                                             std::size_t max_order = 16) {
  std::mt19937 rng(seed);
  std::vector<std::shared_ptr<const FiniteGroup>> groups;
  for (const auto& n : small_group_names()) {
    auto g = named(n);
    if (g->order() <= max_order) groups.push_back(g);
  }
  std::vector<CoverDatum> out;
  std::uniform_int_distribution<std::size_t> pick_group(0, groups.size() - 1);
  std::uniform_int_distribution<int> pick_gbar(0, max_gbar);
  std::uniform_int_distribution<int> pick_nbar(0, max_nbar);
  while (out.size() < count) {
    const auto& g = groups[pick_group(rng)];
    const int gbar = pick_gbar(rng);
    int nbar = pick_nbar(rng);
    // keep the total genus in the hyperbolic or flat range most of the time
    if (gbar == 0 && nbar < 3) nbar = 3 + nbar % (max_nbar - 2);
    std::uniform_int_distribution<int> elem(0, static_cast<int>(g->order()) - 1);
    std::uniform_int_distribution<int> nontrivial(1, static_cast<int>(g->order()) - 1);
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<std::pair<int, int>> handles;
      int prod = 0;
      for (int j = 0; j < gbar; ++j) {
        const int a = elem(rng);
        int b = elem(rng);
        if (nbar == 0 && j == gbar - 1) {
          // need prod * [a, b] = 1: draw b from elements commuting suitably
          std::vector<int> ok;
          for (int y = 0; y < static_cast<int>(g->order()); ++y)
            if (g->mul(prod, g->commutator(a, y)) == 0) ok.push_back(y);
          if (ok.empty()) break;
          b = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
        }
        handles.emplace_back(a, b);
        prod = g->mul(prod, g->commutator(a, b));
      }
      if (static_cast<int>(handles.size()) != gbar) continue;
      std::vector<int> branch;
      for (int i = 0; i + 1 < nbar; ++i) {
        branch.push_back(nontrivial(rng));
        prod = g->mul(prod, branch.back());
      }
      if (nbar > 0) branch.push_back(g->inv(prod));
      CoverDatum d = make_datum(g, gbar, std::move(handles), std::move(branch));
      if (!validate(d).ok()) continue;
      out.push_back(std::move(d));
      break;
    }
  }
  return out;
}

}  // namespace gsurf::testing
