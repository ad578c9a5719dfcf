#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lieforge/elimination.hpp"
#include "lieforge/matrix.hpp"

namespace lieforge {

/// Subspace of K^n stored by its reduced row-echelon basis, which is a
/// canonical representative: two subspaces are equal iff their bases are.
class Subspace {
 public:
  /// The zero subspace of K^ambient.
  explicit Subspace(std::size_t ambient = 0) : basis_(0, ambient) {}

  static Subspace whole(std::size_t ambient) {
    return from_echelon(ambient, rref(Matrix::identity(ambient)));
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    RowReducer reducer(ambient);
    for (const auto& v : vectors) reducer.add_row(v);
    return from_reducer(reducer);
  }

  /// Row space of `m`.
  static Subspace row_space(const Matrix& m) { return from_echelon(m.cols(), rref(m)); }

  static Subspace from_reducer(const RowReducer& reducer) {
    return from_echelon(reducer.cols(), reducer.echelon());
  }

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after reduction by the basis; zero iff v lies in the span.
  Vector reduce(Vector v) const {
    if (v.size() != ambient_dim()) throw Error("vector length does not match ambient dimension");
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rational coeff = v[pivots_[i]];
      if (coeff == 0) continue;
      for (std::size_t c = 0; c < ambient_dim(); ++c) {
        if (basis_(i, c) != 0) v[c] -= coeff * basis_(i, c);
      }
    }
    return v;
  }

  bool contains(const Vector& v) const { return lieforge::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_vector(i))) return false;
    }
    return true;
  }

  /// Coordinates of v in this basis. Throws if v is not in the span.
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw Error("vector is not in the subspace");
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = v[pivots_[i]];
    return out;
  }

  /// Vector with the given coordinates in this basis.
  Vector combine(const Vector& coords) const {
    if (coords.size() != dim()) throw Error("coordinate count does not match dimension");
    Vector v(ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coords[i] == 0) continue;
      for (std::size_t c = 0; c < ambient_dim(); ++c) v[c] += coords[i] * basis_(i, c);
    }
    return v;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error("subspace sum: ambient mismatch");
    RowReducer reducer(a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) reducer.add_row(a.basis_.row_view(i));
    for (std::size_t i = 0; i < b.dim(); ++i) reducer.add_row(b.basis_.row_view(i));
    return from_reducer(reducer);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  static Subspace from_echelon(std::size_t ambient, EchelonForm e) {
    Subspace s(ambient);
    s.basis_ = e.reduced.block(0, 0, e.rank, ambient);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical kernel basis from an echelon form of the constraint rows.
inline Subspace kernel_of(const EchelonForm& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> generators;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced(i, f);
    generators.push_back(std::move(v));
  }
  return Subspace::span(cols, generators);
}

/// {v : m v = 0}.
inline Subspace nullspace(const Matrix& m) { return kernel_of(rref(m), m.cols()); }

inline Subspace nullspace(const RowReducer& reducer) {
  return kernel_of(reducer.echelon(), reducer.cols());
}

}  // namespace lieforge
