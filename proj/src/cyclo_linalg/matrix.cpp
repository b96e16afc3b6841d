#include "gsurf/matrix.hpp"

#include <sstream>
#include <utility>

namespace gsurf {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(static_cast<long>(m(i, j)));
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows clear_denominators(const RatMatrix& m) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

// Fraction-free forward elimination. Every intermediate entry is a minor of
// the input, so the division by the previous pivot is exact.
std::vector<std::size_t> bareiss_forward(IntRows& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) {
        // row unaffected except for the common scaling
        for (std::size_t j = c + 1; j < ncols; ++j)
          if (a[i][j] != 0) a[i][j] = (piv * a[i][j]) / prev;
        continue;
      }
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer v = piv * a[i][j] - lead * a[r][j];
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

EchelonForm echelon(const RatMatrix& m) {
  IntRows a = clear_denominators(m);
  EchelonForm out;
  out.pivot_columns = bareiss_forward(a, m.cols());
  const std::size_t rk = out.pivot_columns.size();
  out.rref = RatMatrix(rk, m.cols());
  for (std::size_t i = 0; i < rk; ++i) {
    const std::size_t pc = out.pivot_columns[i];
    const Rational piv(a[i][pc]);
    for (std::size_t j = pc; j < m.cols(); ++j)
      if (a[i][j] != 0) out.rref(i, j) = Rational(a[i][j]) / piv;
  }
  // back substitution to reduced form
  for (std::size_t i = rk; i-- > 0;) {
    const std::size_t pc = out.pivot_columns[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = out.rref(k, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j)
        if (out.rref(i, j) != 0) out.rref(k, j) -= f * out.rref(i, j);
    }
  }
  return out;
}

std::size_t rank(const RatMatrix& m) {
  IntRows a = clear_denominators(m);
  return bareiss_forward(a, m.cols()).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const EchelonForm ef = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivot_columns) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < ef.rank(); ++i) v[ef.pivot_columns[i]] = -ef.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows() == b.rows(), "solve: row count mismatch");
  RatMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  const EchelonForm ef = echelon(aug);
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < ef.rank(); ++i) {
    const std::size_t pc = ef.pivot_columns[i];
    if (pc >= a.cols()) throw InvariantViolation("solve: inconsistent linear system");
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = ef.rref(i, a.cols() + j);
  }
  return x;
}

std::vector<std::size_t> independent_columns(const RatMatrix& m) {
  IntRows a = clear_denominators(m);
  return bareiss_forward(a, m.cols());
}

RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == rows, "from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

Rational determinant(const RatMatrix& m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace gsurf
