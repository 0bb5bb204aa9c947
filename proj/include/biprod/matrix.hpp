#pragma once

#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "biprod/semiring.hpp"

namespace biprod {

// Dense row-major matrix over a semiring. A morphism n -> m in a matrix
// category is an m x n matrix (rows index the codomain).
template <Semiring S>
class Matrix {
 public:
  using semiring = S;
  using value_type = typename S::value_type;
  using storage = std::vector<value_type>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, S::one());
    return m;
  }

  // Builds a matrix from nested rows; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<value_type>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  // Matrix whose entry (perm[j], j) is one for each column j.
  static Matrix permutation(std::size_t n, const std::vector<std::size_t>& perm) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set(perm.at(j), j, S::one());
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  typename storage::const_reference get(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const value_type& v) {
    data_[i * cols_ + j] = v;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) os << ", ";
      os << '[';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ", ";
        os << S::to_string(get(i, j));
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  storage data_;
};

template <Semiring S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<S> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const typename S::value_type aik = a.get(i, k);
      if (aik == S::zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const typename S::value_type bkj = b.get(k, j);
        if (bkj == S::zero()) continue;
        out.set(i, j, S::add(out.get(i, j), S::mul(aik, bkj)));
      }
    }
  }
  return out;
}

// Entry (i*p + k, j*q + l) of kron(a, b) is a(i, j) * b(k, l), where b is p x q.
template <Semiring S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const typename S::value_type aij = a.get(i, j);
      if (aij == S::zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, S::mul(aij, b.get(k, l)));
    }
  return out;
}

// [top; bottom]
template <Semiring S>
Matrix<S> stack_rows(const Matrix<S>& top, const Matrix<S>& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<S> out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out.set(i, j, top.get(i, j));
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j)
      out.set(top.rows() + i, j, bottom.get(i, j));
  return out;
}

// [left | right]
template <Semiring S>
Matrix<S> stack_cols(const Matrix<S>& left, const Matrix<S>& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<S> out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out.set(i, j, left.get(i, j));
    for (std::size_t j = 0; j < right.cols(); ++j)
      out.set(i, left.cols() + j, right.get(i, j));
  }
  return out;
}

// Block diagonal diag(a, b).
template <Semiring S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.get(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.set(a.rows() + i, a.cols() + j, b.get(i, j));
  return out;
}

template <Semiring S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a.get(i, j));
  return out;
}

}  // namespace biprod
