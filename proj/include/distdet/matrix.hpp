#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/numeric.hpp"

namespace distdet {

/// Dense row-major matrix over an exact scalar type. Square in almost all
/// uses; row vectors (1 x k) appear in the cycle-reduction machinery.
/// Zero-sized matrices are rejected.
template <typename T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& value = T(0))
      : rows_(rows), cols_(cols), entries_(rows * cols, value) {
    if (rows == 0 || cols == 0) throw DomainError("Matrix: zero dimension");
  }

  explicit Matrix(std::size_t dim) : Matrix(dim, dim) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  /// Dimension of a square matrix.
  std::size_t dim() const {
    if (!is_square()) throw DomainError("Matrix::dim: matrix is not square");
    return rows_;
  }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "operator+");
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
      r.entries_[i] += b.entries_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "operator-");
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
      r.entries_[i] -= b.entries_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("operator*: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ail == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += ail * b(l, j);
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& e : r.entries_) e *= s;
    return r;
  }

  /// Debug dump: one "rows cols" line, then entries row by row.
  void dump(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ' ';
        os << (*this)(i, j);
      }
      os << '\n';
    }
  }

  std::string dump() const {
    std::ostringstream os;
    dump(os);
    return os.str();
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b,
                               const char* what) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DomainError(std::string(what) + ": shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

}  // namespace distdet
