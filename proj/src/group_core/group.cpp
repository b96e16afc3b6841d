#include "gsurf/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "gsurf/errors.hpp"

namespace gsurf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw ValidationError("image list is not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text, std::size_t min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int max_point = 0;
  auto fail = [&](const std::string& what) {
    throw ValidationError("bad cycle notation '" + std::string(text) + "': " + what);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') fail("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected a point at offset " + std::to_string(start));
      const int point = std::stoi(std::string(text.substr(start, pos - start)));
      if (point < 1) fail("points are numbered from 1");
      cycle.push_back(point - 1);
      max_point = std::max(max_point, point);
    }
    cycles.push_back(std::move(cycle));
  }
  auto degree = std::max<std::size_t>(min_degree, static_cast<std::size_t>(max_point));
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = static_cast<std::size_t>(cycle[i]);
      if (moved[from]) fail("point " + std::to_string(from + 1) + " appears twice");
      moved[from] = true;
      im[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  std::vector<int> im = images_;
  for (std::size_t i = images_.size(); i < degree; ++i) im.push_back(static_cast<int>(i));
  return Permutation(std::move(im));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  const Permutation x = a.extended(n);
  const Permutation y = b.extended(n);
  std::vector<int> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = y(x(static_cast<int>(i)));
  return Permutation(std::move(im));
}

// ---------------------------------------------------------------------------

FiniteGroup FiniteGroup::from_generators(std::span<const Permutation> generators, std::size_t cap) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(g.extended(degree));

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::map<std::vector<int>, int> ids{{elements[0].images(), 0}};
  std::vector<int> parent{-1};
  std::vector<int> via{-1};
  std::vector<std::vector<int>> right;  // right[g][s] = id of g * gens[s]
  for (std::size_t head = 0; head < elements.size(); ++head) {
    std::vector<int> row(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation p = elements[head] * gens[s];
      auto it = ids.find(p.images());
      if (it == ids.end()) {
        if (elements.size() >= cap)
          throw CapExceeded("group generated by the given permutations exceeds the order cap " +
                            std::to_string(cap));
        const int id = static_cast<int>(elements.size());
        ids.emplace(p.images(), id);
        elements.push_back(std::move(p));
        parent.push_back(static_cast<int>(head));
        via.push_back(static_cast<int>(s));
        row[s] = id;
      } else {
        row[s] = it->second;
      }
    }
    right.push_back(std::move(row));
  }

  FiniteGroup g;
  g.order_ = elements.size();
  const std::size_t n = g.order_;
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    g.table_[a * n] = static_cast<int>(a);
    // a * b = (a * parent(b)) * gen(b), filled in BFS order of b
    for (std::size_t b = 1; b < n; ++b) {
      const int ap = g.table_[a * n + static_cast<std::size_t>(parent[b])];
      g.table_[a * n + b] = right[static_cast<std::size_t>(ap)][static_cast<std::size_t>(via[b])];
    }
  }
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const int id = ids.at(gens[s].images());
    if (id != 0 && std::find(g.generators_.begin(), g.generators_.end(), id) == g.generators_.end())
      g.generators_.push_back(id);
  }
  g.perms_ = std::move(elements);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<int> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("empty Cayley table");
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw ValidationError("Cayley table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
        throw ValidationError("Cayley table row is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
      g.table_[a * n + b] = v;
    }
    if (table[0][a] != static_cast<int>(a) || table[a][0] != static_cast<int>(a))
      throw ValidationError("element 0 of a Cayley table must be the identity");
  }
  if (n <= 128) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (g.mul(g.mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
              g.mul(static_cast<int>(a), g.mul(static_cast<int>(b), static_cast<int>(c))))
            throw ValidationError("Cayley table is not associative");
  }
  if (generators.empty()) {
    // greedy generating set: take the smallest element outside the span so far
    std::vector<bool> in(n, false);
    in[0] = true;
    std::vector<int> span{0};
    for (std::size_t cand = 1; cand < n; ++cand) {
      if (in[cand]) continue;
      generators.push_back(static_cast<int>(cand));
      std::deque<int> queue(span.begin(), span.end());
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int s : generators) {
          const int y = g.mul(x, s);
          if (!in[static_cast<std::size_t>(y)]) {
            in[static_cast<std::size_t>(y)] = true;
            span.push_back(y);
            queue.push_back(y);
          }
        }
      }
    }
  }
  g.generators_ = std::move(generators);
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = order_;
  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<int>(b);
        break;
      }
  orders_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    int x = static_cast<int>(a);
    int k = 1;
    while (x != 0) {
      x = mul(x, static_cast<int>(a));
      ++k;
    }
    orders_[a] = k;
    exponent_ = static_cast<int>(std::lcm(exponent_, k));
  }

  // conjugacy classes by closure under conjugation by the generators
  std::vector<int> raw_class(n, -1);
  std::vector<std::vector<int>> raw_members;
  for (std::size_t a = 0; a < n; ++a) {
    if (raw_class[a] >= 0) continue;
    const int cid = static_cast<int>(raw_members.size());
    std::vector<int> members{static_cast<int>(a)};
    raw_class[a] = cid;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int s : generators_) {
        const int y = conjugate(members[head], s);
        if (raw_class[static_cast<std::size_t>(y)] < 0) {
          raw_class[static_cast<std::size_t>(y)] = cid;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    raw_members.push_back(std::move(members));
  }
  std::vector<int> perm(raw_members.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    const auto& mx = raw_members[static_cast<std::size_t>(x)];
    const auto& my = raw_members[static_cast<std::size_t>(y)];
    const bool ix = mx.front() == 0;
    const bool iy = my.front() == 0;
    if (ix != iy) return ix;
    if (mx.size() != my.size()) return mx.size() < my.size();
    return mx.front() < my.front();
  });
  ConjugacyData cd;
  cd.class_of.assign(n, -1);
  for (std::size_t c = 0; c < perm.size(); ++c) {
    auto& members = raw_members[static_cast<std::size_t>(perm[c])];
    for (int x : members) cd.class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
    cd.representatives.push_back(members.front());
    cd.sizes.push_back(members.size());
    cd.members.push_back(members);
  }
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const int rep = cd.representatives[c];
    cd.inverse_class.push_back(cd.class_of[static_cast<std::size_t>(inv(rep))]);
    cd.element_order.push_back(order_of(rep));
  }
  // at least up to the square map, even for the trivial group
  const int top = std::max(exponent_, 2);
  cd.power_map.assign(static_cast<std::size_t>(top) + 1, std::vector<int>(cd.count()));
  for (std::size_t c = 0; c < cd.count(); ++c) {
    int x = 0;
    for (int k = 0; k <= top; ++k) {
      cd.power_map[static_cast<std::size_t>(k)][c] = cd.class_of[static_cast<std::size_t>(x)];
      x = mul(x, cd.representatives[c]);
    }
  }
  classes_ = std::move(cd);
}

int FiniteGroup::pow(int a, long k) const {
  const long o = order_of(a);
  long e = k % o;
  if (e < 0) e += o;
  int x = 0;
  for (long i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

std::optional<int> FiniteGroup::find(const Permutation& p) const {
  if (perms_.empty()) return std::nullopt;
  const std::size_t degree = perms_[0].degree();
  if (p.degree() > degree) {
    // allowed only if p fixes the extra points
    for (std::size_t i = degree; i < p.degree(); ++i)
      if (p(static_cast<int>(i)) != static_cast<int>(i)) return std::nullopt;
    std::vector<int> im(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(degree));
    return find(Permutation(std::move(im)));
  }
  const Permutation q = p.extended(degree);
  for (std::size_t i = 0; i < perms_.size(); ++i)
    if (perms_[i] == q) return static_cast<int>(i);
  return std::nullopt;
}

std::string FiniteGroup::element_name(int id) const {
  if (!perms_.empty()) return perms_[static_cast<std::size_t>(id)].to_string();
  return "#" + std::to_string(id);
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup generate_subgroup(const FiniteGroup& group, std::span<const int> generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int s : generators) {
      const int y = group.mul(elems[head], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems)};
}

Subgroup whole_group(const FiniteGroup& group) {
  std::vector<int> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(all)};
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

bool is_normal(const FiniteGroup& group, const Subgroup& h) {
  for (int x : h.elements)
    for (int s : group.generators())
      if (!h.contains(group.conjugate(x, s))) return false;
  return true;
}

std::size_t index(const FiniteGroup& group, const Subgroup& h) { return group.order() / h.order(); }

namespace {

std::vector<int> coset_ids(const FiniteGroup& group, const Subgroup& h, bool right) {
  std::vector<int> ids(group.order(), -1);
  int next = 0;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (ids[g] >= 0) continue;
    for (int x : h.elements) {
      const int y = right ? group.mul(x, static_cast<int>(g)) : group.mul(static_cast<int>(g), x);
      ids[static_cast<std::size_t>(y)] = next;
    }
    ++next;
  }
  return ids;
}

}  // namespace

std::vector<int> right_coset_ids(const FiniteGroup& group, const Subgroup& h) { return coset_ids(group, h, true); }
std::vector<int> left_coset_ids(const FiniteGroup& group, const Subgroup& h) { return coset_ids(group, h, false); }

Subgroup center(const FiniteGroup& group) {
  std::vector<int> z;
  for (std::size_t g = 0; g < group.order(); ++g) {
    bool central = true;
    for (int s : group.generators())
      if (group.mul(static_cast<int>(g), s) != group.mul(s, static_cast<int>(g))) {
        central = false;
        break;
      }
    if (central) z.push_back(static_cast<int>(g));
  }
  return Subgroup{std::move(z)};
}

std::vector<int> central_involutions(const FiniteGroup& group) {
  std::vector<int> out;
  for (int z : center(group).elements)
    if (group.order_of(z) == 2) out.push_back(z);
  return out;
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& ambient, const Subgroup& h) {
  SubgroupAsGroup out;
  out.embedding = h.elements;
  out.restriction.assign(ambient.order(), -1);
  for (std::size_t i = 0; i < h.elements.size(); ++i) out.restriction[static_cast<std::size_t>(h.elements[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> table(h.order(), std::vector<int>(h.order()));
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j) {
      const int prod = ambient.mul(h.elements[i], h.elements[j]);
      const int local = out.restriction[static_cast<std::size_t>(prod)];
      if (local < 0) throw ValidationError("element list is not closed under multiplication");
      table[i][j] = local;
    }
  out.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(table)));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Permutation> cycle_gens(std::initializer_list<std::string_view> cycles) {
  std::vector<Permutation> out;
  for (auto c : cycles) out.push_back(Permutation::parse(c));
  return out;
}

std::string cycle_text(int from, int to) {
  std::string s = "(";
  for (int i = from; i <= to; ++i) s += (i == from ? "" : " ") + std::to_string(i);
  return s + ")";
}

std::vector<Permutation> dicyclic(int n) {
  // right-regular representation of <a, b | a^2n, b^2 = a^n, b a b^-1 = a^-1>
  const int m = 2 * n;
  auto point = [m](int k, int eps) { return ((k % m) + m) % m + m * eps; };
  std::vector<int> ra(static_cast<std::size_t>(2 * m)), rb(static_cast<std::size_t>(2 * m));
  for (int k = 0; k < m; ++k) {
    ra[static_cast<std::size_t>(point(k, 0))] = point(k + 1, 0);
    ra[static_cast<std::size_t>(point(k, 1))] = point(k - 1, 1);
    rb[static_cast<std::size_t>(point(k, 0))] = point(k, 1);
    rb[static_cast<std::size_t>(point(k, 1))] = point(k + n, 0);
  }
  return {Permutation(ra), Permutation(rb)};
}

std::vector<Permutation> single_named(std::string_view name) {
  auto number = [&](std::size_t from) {
    const std::string digits(name.substr(from));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ValidationError("unknown group name '" + std::string(name) + "'");
    return std::stoi(digits);
  };
  if (name == "trivial" || name == "C1") return {};
  if (name.empty()) throw ValidationError("empty group name");
  if (name[0] == 'C') {
    const int n = number(1);
    if (n < 1) throw ValidationError("cyclic group order must be positive");
    if (n == 1) return {};
    return {Permutation::parse(cycle_text(1, n))};
  }
  if (name[0] == 'D') {
    const int n = number(1);
    if (n == 1) return cycle_gens({"(1 2)"});
    if (n == 2) return cycle_gens({"(1 2)", "(3 4)"});
    if (n < 1) throw ValidationError("dihedral parameter must be positive");
    std::vector<int> refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = (n - i) % n;
    return {Permutation::parse(cycle_text(1, n)), Permutation(refl)};
  }
  if (name[0] == 'Q') {
    const int order = number(1);
    if (order < 8 || order % 4 != 0) throw ValidationError("dicyclic order must be a multiple of 4, at least 8");
    return dicyclic(order / 4);
  }
  if (name[0] == 'S') {
    const int n = number(1);
    if (n <= 1) return {};
    if (n == 2) return cycle_gens({"(1 2)"});
    return {Permutation::parse(cycle_text(1, n)), Permutation::parse("(1 2)")};
  }
  if (name[0] == 'A') {
    const int n = number(1);
    std::vector<Permutation> gens;
    for (int i = 1; i + 2 <= n; ++i) gens.push_back(Permutation::parse(cycle_text(i, i + 2)));
    return gens;
  }
  throw ValidationError("unknown group name '" + std::string(name) + "'");
}

}  // namespace

std::vector<Permutation> named_group_generators(std::string_view name) {
  std::vector<Permutation> out;
  std::size_t offset = 0;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t stop = name.find('x', start);
    if (stop == std::string_view::npos) stop = name.size();
    auto factor = single_named(name.substr(start, stop - start));
    std::size_t degree = 0;
    for (const auto& p : factor) degree = std::max(degree, p.degree());
    for (const auto& p : factor) {
      std::vector<int> im(offset + degree);
      std::iota(im.begin(), im.end(), 0);
      for (std::size_t i = 0; i < p.degree(); ++i) im[offset + i] = static_cast<int>(offset) + p(static_cast<int>(i));
      out.emplace_back(std::move(im));
    }
    offset += degree;
    start = stop + 1;
  }
  return out;
}

}  // namespace gsurf
