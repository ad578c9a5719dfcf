#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw Error("matrix entry count does not match shape");
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Rational> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw Error("ragged matrix literal");
      e.insert(e.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(e));
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error("row length does not match column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// n x 1 column from a vector.
  static Matrix column(const Vector& v) { return Matrix(v.size(), 1, v); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row_view(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  Vector row(std::size_t r) const {
    auto v = row_view(r);
    return Vector(v.begin(), v.end());
  }

  Vector col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_col(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const { return lieforge::is_zero(entries_); }

  Rational trace() const {
    Rational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational* row = entries_.data() + r * cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] != 0 && v[c] != 0) out[r] += row[c] * v[c];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
  }

  friend Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.entries_) x *= s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Commutator ab - ba.
  friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

  /// Vertical concatenation; all blocks need the same column count.
  static Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t total = 0;
    for (const auto& b : blocks) {
      if (b.cols() != cols) throw Error("vstack column mismatch");
      total += b.rows();
    }
    Matrix out(total, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
      r0 += b.rows();
    }
    return out;
  }

  /// Block-diagonal sum.
  static Matrix direct_sum(const std::vector<Matrix>& blocks) {
    std::size_t nr = 0;
    std::size_t nc = 0;
    for (const auto& b : blocks) {
      nr += b.rows();
      nc += b.cols();
    }
    Matrix out(nr, nc);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
      r0 += b.rows();
      c0 += b.cols();
    }
    return out;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace lieforge
