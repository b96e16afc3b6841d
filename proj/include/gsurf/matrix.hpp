#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "gsurf/errors.hpp"
#include "gsurf/rational.hpp"

namespace gsurf {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("int64 overflow in matrix arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("int64 overflow in matrix arithmetic");
  return r;
}

template <typename T>
void add_product(T& acc, const T& a, const T& b) {
  if constexpr (std::is_integral_v<T>) {
    acc = checked_add(acc, checked_mul(a, b));
  } else {
    acc += a * b;
  }
}

}  // namespace detail

/// Dense row-major matrix. Used with Rational (exact linear algebra) and
/// std::int64_t (integral homology, overflow-checked).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == 0) continue;
          detail::add_product(out(i, j), aik, b(k, j));
        }
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if constexpr (std::is_integral_v<T>) {
        a.data_[i] = detail::checked_add(a.data_[i], b.data_[i]);
      } else {
        a.data_[i] += b.data_[i];
      }
    }
    return a;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix neg = b;
    for (auto& x : neg.data_) x = -x;
    return a + neg;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    require(v.size() == cols_, "matrix-vector product: shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) detail::add_product(out[i], (*this)(i, j), v[j]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;
using RatVector = std::vector<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Row echelon data from fraction-free (Bareiss) elimination with the first
/// nonzero entry in column order as pivot.
struct EchelonForm {
  /// Reduced row echelon form over Q (pivot entries 1), only the rank rows.
  RatMatrix rref;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm echelon(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of {x : M x = 0}; its size is cols - rank. Free columns in increasing
/// order, each basis vector has a 1 at its free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Solves A X = B exactly for X when a solution exists (A may be rectangular);
/// free variables are set to zero. Throws InvariantViolation when inconsistent.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

/// Indices of a maximal set of linearly independent columns (leftmost first).
std::vector<std::size_t> independent_columns(const RatMatrix& m);

RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

/// Determinant of a square matrix.
Rational determinant(const RatMatrix& m);

std::string to_string(const RatMatrix& m);

}  // namespace gsurf
