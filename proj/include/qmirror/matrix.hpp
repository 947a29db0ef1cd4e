#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmirror/laurent.hpp"

namespace qmirror {

/// Dense row-major matrix over a commutative ring element type.
template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
  static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        if (i == j && !at(i, j).is_one()) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
      }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in sum");
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in difference");
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  /// Horizontal concatenation [A | B].
  friend Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("Matrix: hconcat row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
      for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  /// Block-diagonal sum.
  friend Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
  }

  Matrix columns(size_t first, size_t count) const {
    if (first + count > cols_) throw std::out_of_range("Matrix: column slice");
    Matrix r(rows_, count);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < count; ++j) r.at(i, j) = at(i, first + j);
    return r;
  }
  Matrix top_rows(size_t count) const {
    if (count > rows_) throw std::out_of_range("Matrix: row slice");
    Matrix r(count, cols_);
    for (size_t i = 0; i < count; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    return r;
  }
  Matrix column(size_t j) const { return columns(j, 1); }

  void swap_rows(size_t a, size_t b) {
    for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(size_t a, size_t b) {
    for (size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }
  /// row[dst] += f * row[src]
  void add_row_multiple(size_t dst, size_t src, const T& f) {
    for (size_t j = 0; j < cols_; ++j) at(dst, j) += f * at(src, j);
  }
  /// col[dst] += f * col[src]
  void add_col_multiple(size_t dst, size_t src, const T& f) {
    for (size_t i = 0; i < rows_; ++i) at(i, dst) += at(i, src) * f;
  }
  void scale_row(size_t i, const T& u) {
    for (size_t j = 0; j < cols_; ++j) at(i, j) *= u;
  }
  void scale_col(size_t j, const T& u) {
    for (size_t i = 0; i < rows_; ++i) at(i, j) *= u;
  }

  /// Laplace-expansion determinant; intended for the small matrices that
  /// appear in this project (unimodularity checks, test oracles).
  T determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant of non-square");
    if (rows_ == 0) return T(1);
    if (rows_ == 1) return at(0, 0);
    T det{};
    for (size_t j = 0; j < cols_; ++j) {
      if (at(0, j).is_zero()) continue;
      Matrix minor(rows_ - 1, cols_ - 1);
      for (size_t i = 1; i < rows_; ++i) {
        size_t cj = 0;
        for (size_t k = 0; k < cols_; ++k) {
          if (k == j) continue;
          minor.at(i - 1, cj++) = at(i, k);
        }
      }
      T term = at(0, j) * minor.determinant();
      if (j % 2 == 0)
        det += term;
      else
        det -= term;
    }
    return det;
  }

  std::string str() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_; ++i) {
      out += i ? "; " : "";
      for (size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + at(i, j).str();
    }
    return out + "]";
  }

private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

}  // namespace qmirror
