#include "gsurf/character_table.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "gsurf/errors.hpp"

namespace gsurf {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) {
  a %= p;
  if (a < 0) a += p;
  require(a != 0, "Dixon reduction: division by zero mod p");
  return powmod(a, p - 2, p);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 smallest_primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 m = p - 1;
  for (i64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (i64 r = 2; r < p; ++r) {
    bool ok = true;
    for (i64 q : factors)
      if (powmod(r, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  return 1;  // p == 2
}

using ModVec = std::vector<i64>;
using ModMat = std::vector<ModVec>;

// Null space of an s x s matrix over F_p.
std::vector<ModVec> kernel_mod(ModMat a, i64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const i64 inv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const i64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - mulmod(f, a[r][j], p)) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : pivots) is_piv[c] = true;
  std::vector<ModVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    ModVec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - a[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve B X = Y for X where B (k x s) has independent columns.
ModMat solve_mod(const ModMat& b, const ModMat& y, i64 p) {
  const std::size_t k = b.size();
  const std::size_t s = b[0].size();
  const std::size_t t = y[0].size();
  ModMat aug(k, ModVec(s + t));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < s; ++j) aug[i][j] = b[i][j];
    for (std::size_t j = 0; j < t; ++j) aug[i][s + j] = y[i][j];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = r;
    while (piv < k && aug[piv][c] == 0) ++piv;
    require(piv < k, "Dixon reduction: eigenspace basis is not independent");
    std::swap(aug[piv], aug[r]);
    const i64 inv = invmod(aug[r][c], p);
    for (auto& x : aug[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const i64 f = aug[i][c];
      for (std::size_t j = 0; j < s + t; ++j) aug[i][j] = ((aug[i][j] - mulmod(f, aug[r][j], p)) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  ModMat x(s, ModVec(t));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < t; ++j) x[i][j] = aug[i][s + j];
  return x;
}

// Characteristic polynomial via reduction to upper Hessenberg form.
ModVec charpoly_mod(ModMat h, i64 p) {
  const std::size_t n = h.size();
  auto sub = [p](i64 a, i64 b) { return ((a - b) % p + p) % p; };
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    const i64 inv = invmod(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const i64 u = mulmod(h[i][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) h[i][c] = sub(h[i][c], mulmod(u, h[j + 1][c], p));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + mulmod(u, h[r][i], p)) % p;
    }
  }
  // polys[m] = char poly of the leading m x m block, lowest degree first
  std::vector<ModVec> polys{ModVec{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    ModVec next(m + 1, 0);
    const ModVec& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = (next[d + 1] + prev[d]) % p;
      next[d] = sub(next[d], mulmod(h[m - 1][m - 1], prev[d], p));
    }
    i64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      const i64 coef = mulmod(h[i][m - 1], prod, p);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d) next[d] = sub(next[d], mulmod(coef, polys[i][d], p));
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

i64 eval_mod(const ModVec& poly, i64 x, i64 p) {
  i64 acc = 0;
  for (std::size_t d = poly.size(); d-- > 0;) acc = (mulmod(acc, x, p) + poly[d]) % p;
  return acc;
}

}  // namespace

int indicator_value(Indicator ind) { return static_cast<int>(ind); }

CharacterTable CharacterTable::compute(const FiniteGroup& group) {
  const ConjugacyData& cd = group.classes();
  const std::size_t k = cd.count();
  const auto n = static_cast<i64>(group.order());
  const int e = group.exponent();

  i64 p = static_cast<i64>(e) * ((2 * n) / e) + 1;
  while (p <= 2 * n || !is_prime(p)) p += e;
  const i64 root = smallest_primitive_root(p);
  const i64 z = powmod(root, (p - 1) / e, p);  // stands in for zeta_e

  // class constants: cst[j][a][l] = #{x in C_j : x^-1 z_l in C_a}
  std::vector<ModMat> cst(k, ModMat(k, ModVec(k, 0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l) {
      const int zl = cd.representatives[l];
      for (int x : cd.members[j]) {
        const auto a = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(group.mul(group.inv(x), zl))]);
        cst[j][a][l] += 1;
      }
    }

  // split F_p^k into simultaneous eigenspaces of the class matrices
  std::vector<ModMat> spaces;  // each: k x s column basis
  {
    ModMat full(k, ModVec(k, 0));
    for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<ModMat> refined;
    for (auto& basis : spaces) {
      const std::size_t s = basis[0].size();
      if (s == 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      ModMat image(k, ModVec(s, 0));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < s; ++c) {
          i64 acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (cst[j][a][l] != 0 && basis[l][c] != 0) acc = (acc + mulmod(cst[j][a][l] % p, basis[l][c], p)) % p;
          image[a][c] = acc;
        }
      const ModMat restricted = solve_mod(basis, image, p);
      const ModVec poly = charpoly_mod(restricted, p);
      std::size_t covered = 0;
      for (i64 lambda = 0; lambda < p && covered < s; ++lambda) {
        if (eval_mod(poly, lambda, p) != 0) continue;
        ModMat shifted = restricted;
        for (std::size_t i = 0; i < s; ++i) shifted[i][i] = ((shifted[i][i] - lambda) % p + p) % p;
        const auto ker = kernel_mod(shifted, p);
        ModMat sub(k, ModVec(ker.size(), 0));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t c = 0; c < ker.size(); ++c) {
            i64 acc = 0;
            for (std::size_t t = 0; t < s; ++t) acc = (acc + mulmod(basis[a][t], ker[c][t], p)) % p;
            sub[a][c] = acc;
          }
        covered += ker.size();
        refined.push_back(std::move(sub));
      }
      require(covered == s, "Dixon reduction: class matrix not diagonalisable mod p");
    }
    spaces = std::move(refined);
  }
  require(spaces.size() == k, "Dixon reduction: common eigenspaces are not one-dimensional");

  CharacterTable table;
  table.group_order_ = group.order();
  table.exponent_ = e;
  table.prime_ = p;
  table.classes_ = cd;

  for (const auto& space : spaces) {
    ModVec w(k);
    for (std::size_t a = 0; a < k; ++a) w[a] = space[a][0];
    const i64 inv0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, inv0, p);

    i64 norm = 0;
    for (std::size_t a = 0; a < k; ++a) {
      const auto ai = static_cast<std::size_t>(cd.inverse_class[a]);
      norm = (norm + mulmod(mulmod(w[a], w[ai], p), invmod(static_cast<i64>(cd.sizes[a]), p), p)) % p;
    }
    const i64 deg_sq = mulmod(n % p, invmod(norm, p), p);
    i64 degree = 0;
    for (i64 d = 1; d * d <= n; ++d)
      if (mulmod(d, d, p) == deg_sq) degree = d;
    require(degree > 0, "Dixon reduction: no integral degree for a character");

    ModVec chi_mod(k);
    for (std::size_t a = 0; a < k; ++a)
      chi_mod[a] = mulmod(mulmod(w[a], degree, p), invmod(static_cast<i64>(cd.sizes[a]), p), p);

    IrreducibleCharacter row;
    row.degree = degree;
    row.values.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      const int o = cd.element_order[a];
      const i64 zo = powmod(z, e / o, p);
      Cyclotomic value(Rational(0), e);
      for (int t = 0; t < o; ++t) {
        // multiplicity of the eigenvalue zeta_o^t of the representative
        i64 acc = 0;
        for (int l = 0; l < o; ++l) {
          const auto cls = static_cast<std::size_t>(cd.power_map[static_cast<std::size_t>(l)][a]);
          acc = (acc + mulmod(chi_mod[cls], powmod(zo, (static_cast<i64>(o) - t) * l % o, p), p)) % p;
        }
        const i64 mult = mulmod(acc, invmod(o, p), p);
        require(mult <= degree, "Dixon reduction: eigenvalue multiplicity out of range");
        if (mult != 0) value += Cyclotomic::zeta(e, static_cast<long>(t) * (e / o)) * Rational(static_cast<long>(mult));
      }
      row.values[a] = std::move(value);
    }
    table.rows_.push_back(std::move(row));
  }

  // row order: degree, trivial first, then value tuple (descending)
  std::sort(table.rows_.begin(), table.rows_.end(), [](const IrreducibleCharacter& x, const IrreducibleCharacter& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    for (std::size_t a = 0; a < x.values.size(); ++a) {
      const int c = compare(x.values[a], y.values[a]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  {
    // the trivial character is the unique row with all values 1
    auto it = std::find_if(table.rows_.begin(), table.rows_.end(), [](const IrreducibleCharacter& r) {
      return std::all_of(r.values.begin(), r.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
    });
    require(it != table.rows_.end(), "character table has no trivial row");
    std::rotate(table.rows_.begin(), it, it + 1);
  }

  // exact verification: degrees, both orthogonality relations
  long degree_sq_sum = 0;
  for (const auto& r : table.rows_) degree_sq_sum += r.degree * r.degree;
  require(degree_sq_sum == n, "character degrees do not satisfy sum chi(1)^2 = |G|");
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x; y < k; ++y) {
      const Cyclotomic ip = table.inner_product(table.rows_[x].values, table.rows_[y].values);
      require(ip == Cyclotomic(x == y ? 1 : 0), "row orthogonality failed");
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic s;
      for (const auto& r : table.rows_) s += r.values[a] * r.values[b].conj();
      const Cyclotomic expect(a == b ? Rational(n, static_cast<long>(cd.sizes[a])) : Rational(0));
      require(s == expect, "column orthogonality failed");
    }

  for (std::size_t r = 0; r < k; ++r) {
    ClassFunction conj(k);
    for (std::size_t a = 0; a < k; ++a) conj[a] = table.rows_[r].values[a].conj();
    auto it = std::find_if(table.rows_.begin(), table.rows_.end(),
                           [&](const IrreducibleCharacter& other) { return other.values == conj; });
    require(it != table.rows_.end(), "dual character missing from table");
    table.rows_[r].dual = static_cast<std::size_t>(it - table.rows_.begin());
  }
  for (std::size_t r = 0; r < k; ++r) table.rows_[r].indicator = fs_indicator(table, r);

  // Galois orbits
  table.rational_of_.assign(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    if (table.rational_of_[r] != k) continue;
    RationalCharacterClass rc;
    for (long t = 1; t <= e; ++t) {
      if (gcd_l(t, e) != 1) continue;
      ClassFunction img(k);
      for (std::size_t a = 0; a < k; ++a) img[a] = table.rows_[r].values[a].galois(t);
      auto it = std::find_if(table.rows_.begin(), table.rows_.end(),
                             [&](const IrreducibleCharacter& other) { return other.values == img; });
      require(it != table.rows_.end(), "Galois conjugate missing from table");
      const auto idx = static_cast<std::size_t>(it - table.rows_.begin());
      if (std::find(rc.rows.begin(), rc.rows.end(), idx) == rc.rows.end()) rc.rows.push_back(idx);
    }
    std::sort(rc.rows.begin(), rc.rows.end());
    for (std::size_t a = 0; a < k; ++a) {
      Cyclotomic s;
      for (auto idx : rc.rows) s += table.rows_[idx].values[a];
      const auto v = s.as_integer();
      require(v.has_value(), "Galois orbit sum is not integer-valued");
      rc.orbit_sum.push_back(*v);
    }
    for (auto idx : rc.rows) table.rational_of_[idx] = table.rational_.size();
    table.rational_.push_back(std::move(rc));
  }
  return table;
}

Cyclotomic CharacterTable::inner_product(const ClassFunction& f1, const ClassFunction& f2) const {
  Cyclotomic s;
  for (std::size_t a = 0; a < classes_.count(); ++a)
    s += f1[a] * f2[a].conj() * Rational(static_cast<long>(classes_.sizes[a]));
  return s / Rational(static_cast<long>(group_order_));
}

std::vector<long> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<long> out;
  for (const auto& r : rows_) {
    const auto m = inner_product(f, r.values).as_integer();
    require(m.has_value() && *m >= 0, "class function is not a character");
    out.push_back(m->get_si());
  }
  return out;
}

ClassFunction CharacterTable::combination(const std::vector<long>& multiplicities) const {
  ClassFunction f(classes_.count(), Cyclotomic(Rational(0), exponent_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (multiplicities[r] == 0) continue;
    for (std::size_t a = 0; a < f.size(); ++a) f[a] += rows_[r].values[a] * Rational(multiplicities[r]);
  }
  return f;
}

ClassFunction CharacterTable::regular_character() const {
  ClassFunction f(classes_.count(), Cyclotomic(0));
  f[0] = Cyclotomic(Rational(static_cast<long>(group_order_)));
  return f;
}

Indicator fs_indicator(const CharacterTable& table, std::size_t row) {
  const ConjugacyData& cd = table.classes();
  Cyclotomic s;
  for (std::size_t a = 0; a < cd.count(); ++a) {
    const auto sq = static_cast<std::size_t>(cd.power_map[2][a]);
    s += table[row].values[sq] * Rational(static_cast<long>(cd.sizes[a]));
  }
  s /= Rational(static_cast<long>(table.group_order()));
  const auto v = s.as_integer();
  require(v.has_value() && *v >= -1 && *v <= 1, "Frobenius-Schur indicator is not in {-1, 0, 1}");
  return static_cast<Indicator>(v->get_si());
}

ClassFunction induce_character(const FiniteGroup& group, const Subgroup& h,
                               const std::vector<Cyclotomic>& psi_by_element) {
  if (psi_by_element.size() != h.order()) throw ValidationError("character length does not match subgroup order");
  std::vector<const Cyclotomic*> psi(group.order(), nullptr);
  for (std::size_t i = 0; i < h.order(); ++i) psi[static_cast<std::size_t>(h.elements[i])] = &psi_by_element[i];
  for (int x : h.elements)
    for (int s : h.elements)
      if (*psi[static_cast<std::size_t>(group.conjugate(x, s))] != *psi[static_cast<std::size_t>(x)])
        throw ValidationError("subgroup function is not a class function");
  const ConjugacyData& cd = group.classes();
  ClassFunction out(cd.count());
  for (std::size_t a = 0; a < cd.count(); ++a) {
    const int g = cd.representatives[a];
    Cyclotomic s;
    for (std::size_t x = 0; x < group.order(); ++x) {
      const int y = group.conjugate(g, group.inv(static_cast<int>(x)));  // x g x^-1
      if (psi[static_cast<std::size_t>(y)] != nullptr) s += *psi[static_cast<std::size_t>(y)];
    }
    out[a] = s / Rational(static_cast<long>(h.order()));
  }
  return out;
}

std::vector<Cyclotomic> restrict_character(const FiniteGroup& group, const Subgroup& h, const ClassFunction& f) {
  std::vector<Cyclotomic> out;
  out.reserve(h.order());
  for (int x : h.elements) out.push_back(value_at(f, group, x));
  return out;
}

}  // namespace gsurf
