#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylchar/errors.hpp"
#include "weylchar/integer.hpp"

namespace weylchar {

// Dense row-major integer matrix. T is Count or BigInt.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw InputError("matrix product dimension mismatch: " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()));
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const T& lhs = a(i, l);
      if (lhs == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(l, j) != T(0)) out(i, j) = checked_add(out(i, j), checked_mul(lhs, b(l, j)));
    }
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference dimension mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_sub(a(i, j), b(i, j));
  return out;
}

// Ones on the diagonal, zeros strictly below it.
template <class T>
bool is_upper_unitriangular(const Matrix<T>& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != T(1)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != T(0)) return false;
  }
  return true;
}

// Exact inverse by back substitution. Throws ConsistencyError when the input
// is not upper unitriangular; the result is again upper unitriangular.
template <class T>
Matrix<T> invert_unitriangular(const Matrix<T>& m) {
  if (!is_upper_unitriangular(m)) throw ConsistencyError("matrix is not upper unitriangular");
  const std::size_t n = m.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  // Row i of the inverse: inv(i,j) = -sum_{i<l<=j} m(i,l) inv(l,j), filled bottom-up.
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t l = ii + 1; l < n; ++l) {
      const T& coeff = m(ii, l);
      if (coeff == T(0)) continue;
      for (std::size_t j = l; j < n; ++j)
        if (inv(l, j) != T(0)) inv(ii, j) = checked_sub(inv(ii, j), checked_mul(coeff, inv(l, j)));
    }
  }
  return inv;
}

template <class T>
T max_abs_entry(const Matrix<T>& m) {
  T best(0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      T v = m(i, j) < T(0) ? T(-m(i, j)) : m(i, j);
      if (v > best) best = v;
    }
  return best;
}

}  // namespace weylchar
