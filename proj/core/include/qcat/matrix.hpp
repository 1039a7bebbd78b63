#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qcat/scalar.hpp"

namespace qcat {

inline bool is_zero(const ScalarQ& s) { return s.is_zero(); }
inline bool is_zero(const mpq_class& r) { return sgn(r) == 0; }

/// Rough size used to choose pivots that keep intermediate expressions small.
inline std::size_t complexity(const ScalarQ& s) {
  return s.numerator().coeffs().size() + s.denominator().coeffs().size();
}
inline std::size_t complexity(const mpq_class& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!qcat::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!qcat::is_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!qcat::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_)
      if (!qcat::is_zero(x)) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  /// Product skipping zero entries; weight-graded maps are mostly zeros.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (qcat::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (qcat::is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix apply: dimension mismatch");
    std::vector<T> y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (qcat::is_zero(x[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const T& a = (*this)(r, c);
        if (!qcat::is_zero(a)) y[r] += a * x[c];
      }
    }
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<ScalarQ>;
using RationalMatrix = Matrix<mpq_class>;

/// Kronecker product; row index of a is the more significant one.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const T& bkl = b(k, l);
          if (is_zero(bkl)) continue;
          out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return out;
}

namespace detail {

/// In-place Gauss-Jordan on `m`, mirroring row operations onto `aug` when it
/// has rows. Returns pivot columns, one per pivot row (rows 0..rank-1).
template <typename T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, Matrix<T>* aug) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      if (!best || complexity(m(r, col)) < complexity(m(*best, col))) best = r;
    }
    if (!best) continue;
    if (*best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(*best, c));
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c) std::swap((*aug)(row, c), (*aug)(*best, c));
    }
    const T inv = T(1) / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    if (aug)
      for (std::size_t c = 0; c < aug->cols(); ++c)
        if (!is_zero((*aug)(row, c))) (*aug)(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c)
          if (!is_zero((*aug)(row, c))) (*aug)(r, c) -= f * (*aug)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <typename T>
std::size_t rank(Matrix<T> m) {
  return detail::row_reduce<T>(m, nullptr).size();
}

/// Exact inverse, or nullopt when singular.
template <typename T>
std::optional<Matrix<T>> inverse(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  Matrix<T> aug = Matrix<T>::identity(m.rows());
  if (detail::row_reduce(m, &aug).size() != m.rows()) return std::nullopt;
  return aug;
}

/// Exact determinant by fraction-field elimination.
template <typename T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = col; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      if (!best || complexity(m(r, col)) < complexity(m(*best, col))) best = r;
    }
    if (!best) return T(0);
    if (*best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(*best, c));
      det = -det;
    }
    det *= m(col, col);
    const T inv = T(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const T f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!is_zero(m(col, c))) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Unique x with a x = b, nullopt if inconsistent or underdetermined.
template <typename T>
std::optional<std::vector<T>> solve(Matrix<T> a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<T> rhs(b.size(), 1);
  rhs.set_column(0, b);
  const auto pivots = detail::row_reduce(a, &rhs);
  if (pivots.size() != a.cols()) return std::nullopt;
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (!is_zero(rhs(r, 0))) return std::nullopt;
  std::vector<T> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs(r, 0);
  return x;
}

/// Basis of the right null space {x : a x = 0}.
template <typename T>
std::vector<std::vector<T>> null_space(Matrix<T> a) {
  const auto pivots = detail::row_reduce<T>(a, nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(a.cols());
    x[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace qcat
