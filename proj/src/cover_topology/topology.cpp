#include "gsurf/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gsurf/errors.hpp"

namespace gsurf {

namespace {

using detail::checked_add;
using detail::checked_mul;

std::int64_t add_checked(std::int64_t a, std::int64_t b) { return checked_add(a, b); }

RatMatrix column_basis(const RatMatrix& m) {
  const auto cols = independent_columns(m);
  RatMatrix out(m.rows(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, cols[k]);
  return out;
}

// Incremental span of vectors with a row-echelon basis.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}
  bool add(RatVector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

RatVector flatten(const RatMatrix& m) {
  RatVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

CurveSpec parse_curve(std::string_view text, int quotient_genus, int branch_count, std::string name) {
  CurveSpec c;
  c.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const char kind = tok.empty() ? '\0' : tok[0];
    if (kind != 'a' && kind != 'b' && kind != 't') throw ValidationError("curve word: unknown generator '" + tok + "'");
    std::size_t pos = 1;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    int index = 0;
    if (pos == 1 || std::from_chars(tok.data() + 1, tok.data() + pos, index).ec != std::errc() || index < 1)
      throw ValidationError("curve word: bad generator index in '" + tok + "'");
    long power = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^') throw ValidationError("curve word: unexpected text in '" + tok + "'");
      const char* first = tok.data() + pos + 1;
      const char* last = tok.data() + tok.size();
      if (first < last && *first == '+') ++first;
      const auto res = std::from_chars(first, last, power);
      if (res.ec != std::errc() || res.ptr != last || power == 0)
        throw ValidationError("curve word: bad exponent in '" + tok + "'");
    }
    int gen = 0;
    if (kind == 't') {
      if (index > branch_count) throw ValidationError("curve word: " + tok + " exceeds the branch count");
      gen = 2 * quotient_genus + index - 1;
    } else {
      if (index > quotient_genus) throw ValidationError("curve word: " + tok + " exceeds the quotient genus");
      gen = 2 * (index - 1) + (kind == 'b' ? 1 : 0);
    }
    const int sign = power > 0 ? 1 : -1;
    for (long k = 0; k < std::abs(power); ++k) {
      if (!c.word.empty() && c.word.back().gen == gen && c.word.back().sign == -sign)
        c.word.pop_back();
      else
        c.word.push_back({gen, sign});
    }
  }
  // cyclic reduction does not change the free homotopy class
  while (c.word.size() >= 2 && c.word.front().gen == c.word.back().gen && c.word.front().sign == -c.word.back().sign) {
    c.word.pop_back();
    c.word.erase(c.word.begin());
  }
  if (c.word.empty()) throw ValidationError("curve word is empty after reduction");
  return c;
}

std::string to_string(const std::vector<Letter>& word, int quotient_genus) {
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    if (l.gen < 2 * quotient_genus)
      out += (l.gen % 2 == 0 ? "a" : "b") + std::to_string(l.gen / 2 + 1);
    else
      out += "t" + std::to_string(l.gen - 2 * quotient_genus + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::size_t CoverModel::head(std::size_t e) const {
  const std::size_t h = e / generators_;
  return static_cast<std::size_t>(group().mul(static_cast<int>(h), images_[e % generators_]));
}

CoverModel::Walk CoverModel::lift_walk(std::size_t h, const std::vector<Letter>& word) const {
  Walk w;
  std::size_t v = h;
  for (const auto& l : word) {
    const auto s = static_cast<std::size_t>(l.gen);
    if (l.sign > 0) {
      w.push_back({edge(v, s), 1});
      v = head(edge(v, s));
    } else {
      v = static_cast<std::size_t>(group().mul(static_cast<int>(v), group().inv(images_[s])));
      w.push_back({edge(v, s), -1});
    }
  }
  return w;
}

CoverModel::Walk CoverModel::tree_path(std::size_t from, std::size_t to) const {
  Walk up;
  Walk down;
  std::size_t a = from;
  std::size_t b = to;
  while (depth_[a] > depth_[b]) {
    up.push_back({parent_step_[a].edge, -parent_step_[a].sign});
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    down.push_back(parent_step_[b]);
    b = parent_[b];
  }
  while (a != b) {
    up.push_back({parent_step_[a].edge, -parent_step_[a].sign});
    a = parent_[a];
    down.push_back(parent_step_[b]);
    b = parent_[b];
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

IntVector CoverModel::chain_of(const Walk& w) const {
  IntVector c(edge_count_, 0);
  for (const auto& s : w) c[s.edge] += s.sign;
  return c;
}

IntVector CoverModel::lift_chain(int h, const std::vector<Letter>& word) const {
  return chain_of(lift_walk(static_cast<std::size_t>(h), word));
}

// Left push-off of a closed walk as a cochain: at each corner it sweeps
// clockwise past the darts strictly between the outgoing and incoming darts.
IntVector CoverModel::pushoff_cochain(const Walk& w) const {
  IntVector c(edge_count_, 0);
  const std::size_t len = w.size();
  for (std::size_t k = 0; k < len; ++k) {
    const Step& in = w[k];
    const Step& out = w[(k + 1) % len];
    const std::size_t arrive = 2 * in.edge + (in.sign > 0 ? 1 : 0);
    const std::size_t depart = 2 * out.edge + (out.sign > 0 ? 0 : 1);
    for (std::size_t d = next_ccw_[depart]; d != arrive; d = next_ccw_[d]) {
      // crossing a dart at its tail counts -1, at its head +1
      c[d / 2] += (d % 2 == 0) ? -1 : 1;
    }
  }
  return c;
}

IntVector CoverModel::homology_class(const IntVector& cycle) const {
  require(cycle.size() == edge_count_, "chain length does not match the model");
  std::vector<std::int64_t> boundary(group().order(), 0);
  for (std::size_t e = 0; e < edge_count_; ++e) {
    if (cycle[e] == 0) continue;
    boundary[head(e)] = add_checked(boundary[head(e)], cycle[e]);
    boundary[e / generators_] = add_checked(boundary[e / generators_], -cycle[e]);
  }
  for (auto b : boundary) require(b == 0, "chain is not a cycle");
  IntVector z = cycle;
  for (std::size_t f : cotree_order_) {
    const std::size_t e = cotree_edge_[f];
    const std::int64_t coef = face_chains_[f][e];
    require(coef == 1 || coef == -1, "cotree edge occurs twice on its face");
    const std::int64_t y = z[e] * coef;
    if (y == 0) continue;
    for (const auto& s : faces_[f]) z[s.edge] = add_checked(z[s.edge], -checked_mul(y, s.sign));
  }
  IntVector out(basis_edges_.size());
  for (std::size_t k = 0; k < basis_edges_.size(); ++k) out[k] = z[basis_edges_[k]];
  return out;
}

std::int64_t CoverModel::pairing(const IntVector& x, const IntVector& y) const {
  require(x.size() == rank() && y.size() == rank(), "vector length does not match H_1");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0 && form_(i, j) != 0) acc = add_checked(acc, checked_mul(checked_mul(x[i], form_(i, j)), y[j]));
  }
  return acc;
}

std::vector<RatMatrix> CoverModel::rational_actions() const {
  std::vector<RatMatrix> out;
  out.reserve(action_.size());
  for (const auto& a : action_) out.push_back(to_rational(a));
  return out;
}

CoverModel CoverModel::build(const CoverDatum& datum, std::size_t cap) {
  validate_or_throw(datum);
  const FiniteGroup& g = datum.g();
  const std::size_t n = g.order();
  if (n > cap)
    throw CapExceeded("cover model: group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  CoverModel m;
  m.datum_ = datum;
  m.images_ = datum.generator_images();
  m.generators_ = m.images_.size();
  m.edge_count_ = n * m.generators_;
  m.genus_ = total_genus(datum);
  const std::size_t gbar = datum.handles.size();

  // faces: the relation at every vertex, t_i^-d_i once per coset h<x_i>
  std::vector<Letter> relation;
  for (std::size_t j = 0; j < gbar; ++j) {
    const int a = static_cast<int>(2 * j);
    relation.insert(relation.end(), {{a, 1}, {a + 1, 1}, {a, -1}, {a + 1, -1}});
  }
  for (std::size_t i = 0; i < datum.branch.size(); ++i) relation.push_back({static_cast<int>(2 * gbar + i), 1});
  if (!relation.empty())
    for (std::size_t h = 0; h < n; ++h) m.faces_.push_back(m.lift_walk(h, relation));
  for (std::size_t i = 0; i < datum.branch.size(); ++i) {
    const int x = datum.branch[i];
    const Subgroup cyc = generate_subgroup(g, std::vector<int>{x});
    const std::vector<int> cosets = left_coset_ids(g, cyc);
    std::vector<bool> done(n / cyc.order(), false);
    const std::vector<Letter> word(static_cast<std::size_t>(g.order_of(x)), Letter{static_cast<int>(2 * gbar + i), -1});
    for (std::size_t h = 0; h < n; ++h) {
      const auto c = static_cast<std::size_t>(cosets[h]);
      if (done[c]) continue;
      done[c] = true;
      m.faces_.push_back(m.lift_walk(h, word));
    }
  }
  if (m.faces_.empty()) throw ValidationError("cover model needs a surface of positive genus or branch points");
  for (const auto& f : m.faces_) {
    std::size_t end = f.front().sign > 0 ? f.front().edge / m.generators_ : m.head(f.front().edge);
    const Step& last = f.back();
    const std::size_t stop = last.sign > 0 ? m.head(last.edge) : last.edge / m.generators_;
    require(end == stop, "face boundary is not closed");
  }

  // rotation system from the face corners, faces on the left
  const std::size_t darts = 2 * m.edge_count_;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  m.next_ccw_.assign(darts, kUnset);
  std::vector<long> face_pos(m.edge_count_, -1);
  std::vector<long> face_neg(m.edge_count_, -1);
  for (std::size_t f = 0; f < m.faces_.size(); ++f) {
    const Walk& w = m.faces_[f];
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Step& in = w[k];
      const Step& out = w[(k + 1) % w.size()];
      const std::size_t arrive = 2 * in.edge + (in.sign > 0 ? 1 : 0);
      const std::size_t depart = 2 * out.edge + (out.sign > 0 ? 0 : 1);
      require(m.next_ccw_[depart] == kUnset, "dart leaves two faces");
      m.next_ccw_[depart] = arrive;
      auto& slot = in.sign > 0 ? face_pos[in.edge] : face_neg[in.edge];
      require(slot < 0, "edge bounds a face twice on the same side");
      slot = static_cast<long>(f);
    }
  }
  for (std::size_t d = 0; d < darts; ++d) require(m.next_ccw_[d] != kUnset, "dart missing from the rotation");
  for (std::size_t e = 0; e < m.edge_count_; ++e)
    require(face_pos[e] >= 0 && face_neg[e] >= 0, "edge is not on two face sides");
  {
    // each vertex link must be one cycle of all 2r darts
    std::vector<bool> seen(darts, false);
    for (std::size_t d = 0; d < darts; ++d) {
      if (seen[d]) continue;
      std::size_t len = 0;
      for (std::size_t x = d; !seen[x]; x = m.next_ccw_[x]) {
        seen[x] = true;
        ++len;
      }
      require(len == 2 * m.generators_, "vertex link is not a single cycle");
    }
  }

  // spanning tree
  m.parent_.assign(n, 0);
  m.depth_.assign(n, 0);
  m.parent_step_.assign(n, Step{0, 0});
  m.in_tree_.assign(m.edge_count_, false);
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> queue{0};
  reached[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t u = queue[qi];
    for (std::size_t s = 0; s < m.generators_; ++s) {
      const std::size_t fwd = m.edge(u, s);
      const std::size_t v = m.head(fwd);
      if (!reached[v]) {
        reached[v] = true;
        m.parent_[v] = u;
        m.depth_[v] = m.depth_[u] + 1;
        m.parent_step_[v] = {fwd, 1};
        m.in_tree_[fwd] = true;
        queue.push_back(v);
      }
      const auto w = static_cast<std::size_t>(g.mul(static_cast<int>(u), g.inv(m.images_[s])));
      if (!reached[w]) {
        reached[w] = true;
        m.parent_[w] = u;
        m.depth_[w] = m.depth_[u] + 1;
        m.parent_step_[w] = {m.edge(w, s), -1};
        m.in_tree_[m.edge(w, s)] = true;
        queue.push_back(w);
      }
    }
  }
  require(queue.size() == n, "cover graph is disconnected");

  // dual spanning tree avoiding the primal tree
  const std::size_t faces = m.faces_.size();
  m.cotree_edge_.assign(faces, 0);
  std::vector<bool> in_cotree(m.edge_count_, false);
  std::vector<bool> face_seen(faces, false);
  std::vector<std::size_t> fqueue{0};
  face_seen[0] = true;
  for (std::size_t qi = 0; qi < fqueue.size(); ++qi) {
    const std::size_t f = fqueue[qi];
    for (const auto& s : m.faces_[f]) {
      if (m.in_tree_[s.edge]) continue;
      const auto other = static_cast<std::size_t>(s.sign > 0 ? face_neg[s.edge] : face_pos[s.edge]);
      if (face_seen[other]) continue;
      face_seen[other] = true;
      m.cotree_edge_[other] = s.edge;
      in_cotree[s.edge] = true;
      m.cotree_order_.push_back(other);
      fqueue.push_back(other);
    }
  }
  require(fqueue.size() == faces, "dual graph is disconnected");
  for (std::size_t e = 0; e < m.edge_count_; ++e)
    if (!m.in_tree_[e] && !in_cotree[e]) m.basis_edges_.push_back(e);
  require(static_cast<long>(m.basis_edges_.size()) == 2 * m.genus_, "tree-cotree leftover has the wrong size");
  for (const auto& f : m.faces_) m.face_chains_.push_back(m.chain_of(f));

  // basis cycles, their push-offs and the intersection form
  const std::size_t rank = m.basis_edges_.size();
  std::vector<IntVector> chains;
  std::vector<IntVector> cochains;
  for (std::size_t e : m.basis_edges_) {
    Walk w{{e, 1}};
    const Walk back = m.tree_path(m.head(e), e / m.generators_);
    w.insert(w.end(), back.begin(), back.end());
    chains.push_back(m.chain_of(w));
    cochains.push_back(m.pushoff_cochain(w));
  }
  for (const auto& q : cochains)
    for (const auto& f : m.face_chains_) {
      std::int64_t acc = 0;
      for (std::size_t e = 0; e < m.edge_count_; ++e)
        if (f[e] != 0) acc = add_checked(acc, checked_mul(f[e], q[e]));
      require(acc == 0, "push-off cochain is not a cocycle");
    }
  m.form_ = IntMatrix(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      std::int64_t acc = 0;
      for (std::size_t e = 0; e < m.edge_count_; ++e)
        if (chains[i][e] != 0 && cochains[j][e] != 0) acc = add_checked(acc, checked_mul(chains[i][e], cochains[j][e]));
      m.form_(i, j) = acc;
    }
  require(m.form_.transpose() == IntMatrix(rank, rank) - m.form_, "intersection form is not skew-symmetric");
  const Rational det = determinant(to_rational(m.form_));
  require(det == 1, "intersection form is not unimodular");

  // group action on H_1
  m.action_.assign(n, IntMatrix(rank, rank));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < rank; ++k) {
      IntVector moved(m.edge_count_, 0);
      for (std::size_t e = 0; e < m.edge_count_; ++e) {
        if (chains[k][e] == 0) continue;
        const std::size_t h = e / m.generators_;
        moved[m.edge(static_cast<std::size_t>(g.mul(static_cast<int>(x), static_cast<int>(h))), e % m.generators_)] +=
            chains[k][e];
      }
      const IntVector img = m.homology_class(moved);
      for (std::size_t i = 0; i < rank; ++i) m.action_[x](i, k) = img[i];
    }
    require(m.action_[x].transpose() * m.form_ * m.action_[x] == m.form_, "group element does not preserve the form");
  }
  require(m.action_[0] == IntMatrix::identity(rank), "identity does not act trivially");
  for (int s : g.generators())
    for (std::size_t x = 0; x < n; ++x)
      require(m.action_[x] * m.action_[static_cast<std::size_t>(s)] ==
                  m.action_[static_cast<std::size_t>(g.mul(static_cast<int>(x), s))],
              "action is not a homomorphism");
  return m;
}

MultiTwistOrbit lift_curve(const CoverModel& model, const CurveSpec& curve) {
  if (curve.word.empty()) throw ValidationError("curve word is empty");
  const FiniteGroup& g = model.group();
  const std::vector<int> images = model.datum().generator_images();
  MultiTwistOrbit orbit;
  orbit.curve = curve;
  int p = 0;
  for (const auto& l : curve.word) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
      throw ValidationError("curve word uses a generator outside the datum");
    const int img = images[static_cast<std::size_t>(l.gen)];
    p = g.mul(p, l.sign > 0 ? img : g.inv(img));
  }
  orbit.monodromy = p;
  orbit.degree = g.order_of(p);
  std::vector<Letter> power;
  for (int k = 0; k < orbit.degree; ++k) power.insert(power.end(), curve.word.begin(), curve.word.end());
  const Subgroup cyc = generate_subgroup(g, std::vector<int>{p});
  const std::vector<int> cosets = left_coset_ids(g, cyc);
  std::vector<bool> done(g.order() / cyc.order(), false);
  for (std::size_t h = 0; h < g.order(); ++h) {
    const auto c = static_cast<std::size_t>(cosets[h]);
    if (done[c]) continue;
    done[c] = true;
    orbit.component_starts.push_back(static_cast<int>(h));
    orbit.classes.push_back(model.homology_class(model.lift_chain(static_cast<int>(h), power)));
  }
  for (std::size_t i = 0; i < orbit.classes.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.classes.size(); ++j)
      if (model.pairing(orbit.classes[i], orbit.classes[j]) != 0)
        throw ValidationError("input word cannot be an embedded G-transverse circle");
  return orbit;
}

IntMatrix transvection(const CoverModel& model, const MultiTwistOrbit& orbit) {
  const std::size_t r = model.rank();
  IntMatrix t = IntMatrix::identity(r);
  for (const auto& a : orbit.classes) {
    // column k gains <e_k, a> a with <e_k, a> = (Omega a)_k
    const IntVector oa = model.form().apply(a);
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t k = 0; k < r; ++k)
        if (oa[k] != 0) t(i, k) = add_checked(t(i, k), checked_mul(a[i], oa[k]));
    }
  }
  return t;
}

IsotypicalImage isotypical_image_test(const CoverModel& model, const CharacterTable& table,
                                      const MultiTwistOrbit& orbit, std::size_t rational_class) {
  if (rational_class >= table.rational_classes().size()) throw ValidationError("rational class out of range");
  const RatMatrix e =
      group_algebra_image(model.rational_actions(), rational_idempotent(model.group(), table, rational_class));
  IsotypicalImage out;
  for (const auto& a : orbit.classes) {
    RatVector v(a.begin(), a.end());
    out.projections.push_back(e.apply(v));
    for (const auto& x : out.projections.back())
      if (x != 0) out.nonzero = true;
  }
  return out;
}

TwistCertificate twist_algebra_certificate(const CoverModel& model, const CharacterTable& table,
                                           const std::vector<CurveSpec>& curves, std::size_t rational_class) {
  if (rational_class >= table.rational_classes().size()) throw ValidationError("rational class out of range");
  TwistCertificate cert;
  cert.rational_class = rational_class;
  cert.caveats.push_back("curve words are assumed to be embedded; only isotropy of their lifts is checked");
  cert.caveats.push_back("algebraic certificate only; Zariski closures are not computed");

  const FiniteGroup& g = model.group();
  const std::vector<RatMatrix> actions = model.rational_actions();
  const RatMatrix e = group_algebra_image(actions, rational_idempotent(g, table, rational_class));
  const RatMatrix w = column_basis(e);
  const std::size_t k = w.cols();
  cert.block_dimension = k;

  CoverHomology hom;
  hom.dimension = model.rank();
  hom.action = actions;
  const CommutantResult cr = commutant_oracle(hom, g, table, rational_class);
  cert.division_algebra_dimension = cr.division_algebra_dimension;
  if (k == 0) {
    cert.verdict = "inconclusive";
    cert.caveats.push_back("the isotypical block is zero");
    return cert;
  }

  std::vector<RatMatrix> gens;
  for (int s : g.generators()) gens.push_back(solve(w, actions[static_cast<std::size_t>(s)] * w));
  for (const auto& c : curves) {
    const RatMatrix t = to_rational(transvection(model, lift_curve(model, c)));
    gens.push_back(solve(w, t * w));
  }

  // unital algebra generated by gens, grown by right multiplication until stable
  SpanBuilder span(k * k);
  std::vector<RatMatrix> basis{RatMatrix::identity(k)};
  span.add(flatten(basis.front()));
  for (std::size_t i = 0; i < basis.size() && span.size() < k * k; ++i)
    for (const auto& x : gens) {
      RatMatrix prod = basis[i] * x;
      if (span.add(flatten(prod))) basis.push_back(std::move(prod));
      if (span.size() == k * k) break;
    }
  cert.algebra_dimension = span.size();
  cert.commutant_dimension = commutant_dimension(gens, k);
  cert.verdict = static_cast<long>(cert.commutant_dimension) == cert.division_algebra_dimension ? "irreducible"
                                                                                                : "inconclusive";
  return cert;
}

}  // namespace gsurf
