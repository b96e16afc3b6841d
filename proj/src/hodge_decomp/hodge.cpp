#include "gsurf/hodge.hpp"

#include <algorithm>
#include <map>

#include "gsurf/errors.hpp"

namespace gsurf {

namespace {

Rational exact_rational(const Cyclotomic& c, const char* what) {
  const auto q = c.as_rational();
  require(q.has_value(), what);
  return *q;
}

long exact_count(const Rational& q, const char* what) {
  require(is_integer(q) && q >= 0, what);
  return q.get_num().get_si();
}

}  // namespace

long eigenvalue_multiplicity(const FiniteGroup& group, const CharacterTable& table, std::size_t row, int g, int j) {
  const int d = group.order_of(g);
  Cyclotomic acc;
  int x = 0;
  for (int k = 0; k < d; ++k) {
    const long e = mod_floor(-static_cast<long>(j) * k, d);
    acc += value_at(table[row].values, group, x) * Cyclotomic::zeta(d, e);
    x = group.mul(x, g);
  }
  acc /= Rational(d);
  return exact_count(exact_rational(acc, "eigenvalue multiplicity is not rational"),
                     "eigenvalue multiplicity is not a non-negative integer");
}

long h0_multiplicity(const CoverDatum& datum, const CharacterTable& table, std::size_t row) {
  if (table.is_trivial(row)) return datum.quotient_genus;
  const FiniteGroup& g = datum.g();
  Rational m = Rational(datum.quotient_genus - 1) * Rational(table[row].degree);
  for (int x : datum.branch) {
    const int d = g.order_of(x);
    for (int j = 1; j <= d; ++j) {
      const long n = eigenvalue_multiplicity(g, table, row, x, j % d);
      Rational weight(d - j, d);
      weight.canonicalize();
      m += Rational(n) * weight;
    }
  }
  return exact_count(m, "Chevalley-Weil multiplicity is not a non-negative integer");
}

IsotypicalVector h0_character(const CoverDatum& datum, const CharacterTable& table) {
  IsotypicalVector out(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) out[r] = h0_multiplicity(datum, table, r);
  return out;
}

long h1_multiplicity(const CoverDatum& datum, const CharacterTable& table, std::size_t row) {
  if (table.is_trivial(row)) return 2L * datum.quotient_genus;
  const long deg = table[row].degree;
  long m = 2L * (datum.quotient_genus - 1) * deg;
  for (int x : datum.branch) m += deg - eigenvalue_multiplicity(datum.g(), table, row, x, 0);
  require(m >= 0, "H^1 multiplicity is negative");
  return m;
}

IsotypicalVector h1_character(const CoverDatum& datum, const CharacterTable& table) {
  IsotypicalVector out(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) out[r] = h1_multiplicity(datum, table, r);
  return out;
}

CoverHomology cover_homology(const CoverDatum& datum, std::size_t cap) {
  validate_or_throw(datum);
  const FiniteGroup& g = datum.g();
  const std::size_t n = g.order();
  if (n > cap)
    throw CapExceeded("chain-complex oracle: group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const std::vector<int> images = datum.generator_images();
  const std::size_t r = images.size();
  const std::size_t edges = n * r;
  auto edge = [&](std::size_t h, std::size_t s) { return h * r + s; };
  auto target = [&](std::size_t h, std::size_t s) {
    return static_cast<std::size_t>(g.mul(static_cast<int>(h), images[s]));
  };

  // BFS spanning tree of the Schreier graph; parent_edge[v] with orientation
  std::vector<long> parent_edge(n, -1);
  std::vector<int> parent_sign(n, 0);
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> in_tree(edges, false);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t u = queue[qi];
    for (std::size_t s = 0; s < r; ++s) {
      const std::size_t v = target(u, s);
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        parent_edge[v] = static_cast<long>(edge(u, s));
        parent_sign[v] = 1;
        in_tree[edge(u, s)] = true;
        queue.push_back(v);
      }
      const std::size_t w = static_cast<std::size_t>(g.mul(static_cast<int>(u), g.inv(images[s])));
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        parent_edge[w] = static_cast<long>(edge(w, s));
        parent_sign[w] = -1;
        in_tree[edge(w, s)] = true;
        queue.push_back(w);
      }
    }
  }
  require(queue.size() == n, "Schreier graph is disconnected");

  // cycle coordinates: coefficients on non-tree edges
  std::vector<long> coord(edges, -1);
  std::vector<std::size_t> nontree;
  for (std::size_t e = 0; e < edges; ++e)
    if (!in_tree[e]) {
      coord[e] = static_cast<long>(nontree.size());
      nontree.push_back(e);
    }
  const std::size_t z = nontree.size();
  require(z == edges - n + 1, "cycle space has the wrong rank");

  using Chain = std::map<std::size_t, long>;
  auto tree_path = [&](std::size_t v) {  // chain of the tree path root -> v
    Chain c;
    while (v != 0) {
      c[static_cast<std::size_t>(parent_edge[v])] += parent_sign[v];
      v = parent[v];
    }
    return c;
  };
  auto to_coords = [&](const Chain& c) {
    RatVector v(z, Rational(0));
    for (const auto& [e, k] : c)
      if (k != 0 && coord[e] >= 0) v[static_cast<std::size_t>(coord[e])] += k;
    return v;
  };
  auto lift = [&](std::size_t start, const std::vector<Letter>& word) {
    Chain c;
    std::size_t v = start;
    for (const auto& l : word) {
      const auto s = static_cast<std::size_t>(l.gen);
      if (l.sign > 0) {
        c[edge(v, s)] += 1;
        v = target(v, s);
      } else {
        v = static_cast<std::size_t>(g.mul(static_cast<int>(v), g.inv(images[s])));
        c[edge(v, s)] -= 1;
      }
    }
    require(v == start, "boundary word does not lift to a closed loop");
    return c;
  };

  // boundary loops: x_i^{d_i} once per coset h<x_i>, the surface relation at every h
  std::vector<RatVector> boundaries;
  const std::size_t gbar = datum.handles.size();
  for (std::size_t i = 0; i < datum.branch.size(); ++i) {
    const int x = datum.branch[i];
    const Subgroup cyc = generate_subgroup(g, std::vector<int>{x});
    const std::vector<int> cosets = left_coset_ids(g, cyc);
    std::vector<bool> done(n / cyc.order(), false);
    const std::vector<Letter> word(static_cast<std::size_t>(g.order_of(x)), Letter{static_cast<int>(2 * gbar + i), 1});
    for (std::size_t h = 0; h < n; ++h) {
      const auto c = static_cast<std::size_t>(cosets[h]);
      if (done[c]) continue;
      done[c] = true;
      boundaries.push_back(to_coords(lift(h, word)));
    }
  }
  std::vector<Letter> relation;
  for (std::size_t j = 0; j < gbar; ++j) {
    const int a = static_cast<int>(2 * j);
    const int b = a + 1;
    relation.insert(relation.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  for (std::size_t i = 0; i < datum.branch.size(); ++i) relation.push_back({static_cast<int>(2 * gbar + i), 1});
  for (std::size_t h = 0; h < n; ++h) boundaries.push_back(to_coords(lift(h, relation)));

  // quotient Z/B: reduce against the RREF of the boundary span; the
  // non-pivot coordinates give the complement basis
  RatMatrix bmat(boundaries.size(), z);
  for (std::size_t i = 0; i < boundaries.size(); ++i)
    for (std::size_t j = 0; j < z; ++j) bmat(i, j) = boundaries[i][j];
  const EchelonForm ef = echelon(bmat);
  std::vector<bool> is_pivot(z, false);
  for (auto p : ef.pivot_columns) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < z; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  const std::size_t dim = free_cols.size();
  require(static_cast<long>(dim) == 2 * total_genus(datum), "H^1 of the cell model has the wrong dimension");

  auto reduce = [&](RatVector v) {
    for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) {
      const std::size_t p = ef.pivot_columns[i];
      if (v[p] == 0) continue;
      const Rational f = v[p];
      for (std::size_t j = 0; j < z; ++j)
        if (ef.rref(i, j) != 0) v[j] -= f * ef.rref(i, j);
    }
    RatVector out(dim);
    for (std::size_t k = 0; k < dim; ++k) out[k] = v[free_cols[k]];
    return out;
  };

  // complement basis vectors are fundamental cycles of the free non-tree edges
  std::vector<Chain> basis_chains;
  for (std::size_t col : free_cols) {
    const std::size_t e = nontree[col];
    const std::size_t u = e / r;
    const std::size_t s = e % r;
    Chain c = tree_path(u);
    c[e] += 1;
    for (const auto& [te, k] : tree_path(target(u, s))) c[te] -= k;
    basis_chains.push_back(std::move(c));
  }
  auto act = [&](int x) {  // matrix of left multiplication by x
    RatMatrix m(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      Chain moved;
      for (const auto& [e, c] : basis_chains[k]) {
        const std::size_t h = e / r;
        moved[edge(static_cast<std::size_t>(g.mul(x, static_cast<int>(h))), e % r)] += c;
      }
      const RatVector img = reduce(to_coords(moved));
      for (std::size_t i = 0; i < dim; ++i) m(i, k) = img[i];
    }
    return m;
  };

  CoverHomology out;
  out.dimension = dim;
  out.action.assign(n, RatMatrix());
  out.action[0] = RatMatrix::identity(dim);
  std::vector<RatMatrix> gen_action;
  for (int s : g.generators()) gen_action.push_back(act(s));
  std::vector<bool> have(n, false);
  have[0] = true;
  std::vector<int> frontier{0};
  for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
    const int u = frontier[qi];
    for (std::size_t k = 0; k < gen_action.size(); ++k) {
      const int v = g.mul(u, g.generators()[k]);
      if (have[static_cast<std::size_t>(v)]) continue;
      have[static_cast<std::size_t>(v)] = true;
      out.action[static_cast<std::size_t>(v)] = out.action[static_cast<std::size_t>(u)] * gen_action[k];
      frontier.push_back(v);
    }
  }
  require(frontier.size() == n, "group generators do not reach every element");
  return out;
}

IsotypicalVector h1_chain_complex_oracle(const CoverDatum& datum, const CharacterTable& table, std::size_t cap) {
  const CoverHomology hom = cover_homology(datum, cap);
  const FiniteGroup& g = datum.g();
  IsotypicalVector out(table.size());
  for (std::size_t row = 0; row < table.size(); ++row) {
    Cyclotomic acc;
    for (std::size_t x = 0; x < g.order(); ++x)
      acc += value_at(table[row].values, g, static_cast<int>(x)).conj() * hom.action[x].trace();
    acc /= Rational(static_cast<long>(g.order()));
    out[row] = exact_count(exact_rational(acc, "oracle multiplicity is not rational"),
                           "oracle multiplicity is not a non-negative integer");
  }
  return out;
}

ClassFunction character_of(const CharacterTable& table, const IsotypicalVector& f) {
  require(f.size() == table.size(), "multiplicity vector length does not match the table");
  return table.combination(f);
}

Sym2Report sym2_report(const CharacterTable& table, const IsotypicalVector& f) {
  require(f.size() == table.size(), "multiplicity vector length does not match the table");
  for (long m : f)
    if (m < 0) throw ValidationError("multiplicities must be non-negative");
  Sym2Report rep;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const long m = f[r];
    switch (table[r].indicator) {
      case Indicator::kOrthogonal:
        rep.orthogonal_part += binomial(m + 1, 2);
        break;
      case Indicator::kSymplectic:
        rep.symplectic_part += binomial(m, 2);
        break;
      case Indicator::kComplex:
        if (r < table[r].dual) rep.complex_part += Integer(m) * Integer(f[table[r].dual]);
        break;
    }
  }
  rep.total = rep.orthogonal_part + rep.symplectic_part + rep.complex_part;

  const ClassFunction chi = character_of(table, f);
  const ConjugacyData& cd = table.classes();
  Cyclotomic sym;
  Cyclotomic alt;
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const Cyclotomic sq = chi[c] * chi[c];
    const Cyclotomic at_square = chi[static_cast<std::size_t>(cd.power_map[2][c])];
    const Rational size(static_cast<long>(cd.sizes[c]));
    sym += (sq + at_square) * size;
    alt += (sq - at_square) * size;
  }
  const Rational denom(2L * static_cast<long>(table.group_order()));
  sym /= denom;
  alt /= denom;
  const auto s = sym.as_integer();
  const auto a = alt.as_integer();
  require(s.has_value() && a.has_value(), "invariant dimensions are not integral");
  rep.character_formula = *s;
  rep.alternating = *a;
  require(rep.character_formula == rep.total, "Sym^2 breakdown disagrees with the character formula");
  return rep;
}

EndoReport check_theorem_endo(const CoverDatum& datum, const CharacterTable& table) {
  validate_or_throw(datum);
  EndoReport rep;
  rep.h0 = h0_character(datum, table);
  rep.moduli_dim_positive = moduli_dimension(datum).positive_dimensional;
  if (!rep.moduli_dim_positive)
    rep.witnesses.push_back({"moduli_dim_positive", std::nullopt,
                             "quotient orbifold has non-negative Euler characteristic or is a 3-punctured sphere"});
  rep.no_central_hyperelliptic = true;
  for (int z : central_involutions(datum.g()))
    if (is_hyperelliptic_involution(datum, z)) {
      rep.no_central_hyperelliptic = false;
      rep.witnesses.push_back(
          {"no_central_hyperelliptic", std::nullopt, "central involution " + datum.g().element_name(z) + " is hyperelliptic"});
    }
  rep.symplectic_mult_ok = true;
  rep.dual_pairs_ok = true;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const long m = rep.h0[r];
    if (m == 0) continue;
    if (table[r].indicator == Indicator::kSymplectic && m < 3) {
      rep.symplectic_mult_ok = false;
      rep.witnesses.push_back({"symplectic_mult_ok", r, "multiplicity " + std::to_string(m) + " < 3"});
    }
    if (table[r].indicator == Indicator::kComplex) {
      const long md = rep.h0[table[r].dual];
      if (m < 2 || md < 2) {
        rep.dual_pairs_ok = false;
        rep.witnesses.push_back({"dual_pairs_ok", r,
                                 "multiplicities " + std::to_string(m) + " and " + std::to_string(md) + " for the dual"});
      }
    }
  }
  rep.hypotheses_hold =
      rep.moduli_dim_positive && rep.no_central_hyperelliptic && rep.symplectic_mult_ok && rep.dual_pairs_ok;
  rep.every_nontrivial_mult_ge_2 = true;
  rep.every_nontrivial_mult_ge_4 = true;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const long m = rep.h0[r];
    if (m < 2 && rep.every_nontrivial_mult_ge_2) {
      rep.every_nontrivial_mult_ge_2 = false;
      rep.witnesses.push_back({"every_nontrivial_mult_ge_2", r, "multiplicity " + std::to_string(m)});
    }
    if (m < 4 && rep.every_nontrivial_mult_ge_4) {
      rep.every_nontrivial_mult_ge_4 = false;
      rep.witnesses.push_back({"every_nontrivial_mult_ge_4", r, "multiplicity " + std::to_string(m)});
    }
  }
  return rep;
}

GNReport check_theorem_GN(const CoverDatum& datum, const CharacterTable& table, const Subgroup& n) {
  validate_or_throw(datum);
  const FiniteGroup& g = datum.g();
  for (int x : n.elements)
    if (x < 0 || static_cast<std::size_t>(x) >= g.order()) throw ValidationError("subgroup element out of range");
  GNReport rep;
  rep.index_two = index(g, n) == 2;
  if (!rep.index_two)
    rep.witnesses.push_back({"index_two", std::nullopt, "index is " + std::to_string(index(g, n))});
  rep.acts_freely = true;
  for (int x : n.elements)
    if (x != 0 && fixed_point_count(datum, x) != 0) {
      rep.acts_freely = false;
      rep.witnesses.push_back({"acts_freely", std::nullopt, g.element_name(x) + " has fixed points"});
      break;
    }
  rep.quotient_genus_n = quotient_genus(datum, n);
  rep.quotient_genus_ge_2 = rep.quotient_genus_n >= 2;
  rep.quotient_genus_ge_4 = rep.quotient_genus_n >= 4;
  if (!rep.quotient_genus_ge_2)
    rep.witnesses.push_back({"quotient_genus_ge_2", std::nullopt, "g(C_N) = " + std::to_string(rep.quotient_genus_n)});
  rep.quotient_hyperelliptic = datum.quotient_genus == 0;
  for (int x : datum.branch)
    if (n.contains(x)) rep.quotient_hyperelliptic = false;
  if (!rep.quotient_hyperelliptic)
    rep.witnesses.push_back({"quotient_hyperelliptic", std::nullopt,
                             "G/N does not act on C_N as a hyperelliptic involution"});
  rep.hypotheses_hold = rep.index_two && rep.acts_freely && rep.quotient_genus_ge_2 && rep.quotient_hyperelliptic;
  rep.h0 = h0_character(datum, table);
  if (!rep.hypotheses_hold) return rep;

  rep.conclusions_checked = true;
  auto trivial_on_n = [&](std::size_t r) {
    return std::all_of(n.elements.begin(), n.elements.end(), [&](int x) {
      return value_at(table[r].values, g, x) == Cyclotomic(table[r].degree);
    });
  };
  // (i): the N-trivial part of chi^phi is g(C_N) copies of the sign of G/N
  rep.conclusion_i = true;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (!trivial_on_n(r)) continue;
    const long expect = table.is_trivial(r) ? 0 : rep.quotient_genus_n;
    if (rep.h0[r] != expect) {
      rep.conclusion_i = false;
      rep.witnesses.push_back({"conclusion_i", r,
                               "multiplicity " + std::to_string(rep.h0[r]) + ", expected " + std::to_string(expect)});
    }
  }

  const SubgroupAsGroup sub = subgroup_as_group(g, n);
  const CharacterTable tn = CharacterTable::compute(*sub.group);
  const ConjugacyData& ncd = sub.group->classes();
  rep.conclusion_ii = true;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (trivial_on_n(r) || rep.h0[r] == 0) continue;
    GNConstituent c;
    c.row = r;
    c.multiplicity = rep.h0[r];
    c.expected = Rational(rep.quotient_genus_n - 1) * Rational(table[r].degree) / Rational(2);
    c.multiplicity_ok = Rational(c.multiplicity) == c.expected;
    ClassFunction res(ncd.count());
    for (std::size_t k = 0; k < ncd.count(); ++k)
      res[k] = value_at(table[r].values, g, sub.embedding[static_cast<std::size_t>(ncd.representatives[k])]);
    const std::vector<long> parts = tn.decompose(res);
    std::vector<std::size_t> constituents;
    bool simple = true;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k] == 0) continue;
      if (parts[k] != 1) simple = false;
      constituents.push_back(k);
    }
    c.restriction_splits = simple && constituents.size() == 2;
    if (!constituents.empty()) {
      std::vector<Cyclotomic> psi;
      for (int x : n.elements)
        psi.push_back(value_at(tn[constituents[0]].values, *sub.group, sub.restriction[static_cast<std::size_t>(x)]));
      c.induction_recovers = induce_character(g, n, psi) == table[r].values;
    }
    if (!c.multiplicity_ok)
      rep.witnesses.push_back({"conclusion_ii", r,
                               "multiplicity " + std::to_string(c.multiplicity) + ", formula gives " + to_string(c.expected)});
    if (!c.restriction_splits)
      rep.witnesses.push_back({"conclusion_ii", r, "restriction to N does not split into two distinct irreducibles"});
    if (!c.induction_recovers)
      rep.witnesses.push_back({"conclusion_ii", r, "induction from N does not recover the character"});
    rep.conclusion_ii = rep.conclusion_ii && c.multiplicity_ok && c.restriction_splits && c.induction_recovers;
    rep.constituents.push_back(c);
  }
  return rep;
}

}  // namespace gsurf
