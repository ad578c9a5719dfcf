#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieforge/matrix.hpp"
#include "lieforge/report.hpp"
#include "lieforge/subspace.hpp"

namespace lieforge {

/// Finite-dimensional Lie algebra given by structure constants:
/// c(i, j, k) is the coefficient of e_k in [e_i, e_j].
///
/// The tensor is stored in full (both i < j and i > j). Construction does
/// not enforce the Lie axioms so that defective tensors can be inspected;
/// run validate() for that.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Rational> constants)
      : name_(std::move(name)), labels_(std::move(labels)), c_(std::move(constants)) {
    const std::size_t n = labels_.size();
    if (c_.size() != n * n * n) throw Error("structure tensor size must be dim^3");
  }

  /// Builds from [e_i, e_j] = sum coeff e_k entries with i < j; the i > j
  /// half is mirrored with the opposite sign.
  static LieAlgebra from_brackets(
      std::string name, std::vector<std::string> labels,
      const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& entries) {
    const std::size_t n = labels.size();
    std::vector<Rational> c(n * n * n);
    for (const auto& [i, j, k, v] : entries) {
      if (i >= j || j >= n || k >= n) throw Error("bracket entry needs i < j < dim and k < dim");
      c[(i * n + j) * n + k] += v;
      c[(j * n + i) * n + k] -= v;
    }
    return LieAlgebra(std::move(name), std::move(labels), std::move(c));
  }

  static LieAlgebra abelian(std::size_t n) {
    return LieAlgebra("abelian:" + std::to_string(n), default_labels(n), std::vector<Rational>(n * n * n));
  }

  static std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e") {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
  }

  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& constants() const { return c_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim() + j) * dim() + k]; }

  /// Coordinates of [e_i, e_j].
  Vector bracket_basis(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    return Vector(c_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                  c_.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw Error("bracket: vector length must equal dim");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) {
          if (c(i, j, k) != 0) out[k] += xy * c(i, j, k);
        }
      }
    }
    return out;
  }

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  Matrix ad(std::size_t i) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = c(i, j, k);
    return m;
  }

  bool is_abelian() const { return lieforge::is_zero(c_); }

  void rename(std::string name) { name_ = std::move(name); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_.size() == b.labels_.size() && a.c_ == b.c_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

/// Antisymmetry (including [e_i, e_i] = 0) and Jacobi, every failing instance
/// with its residual.
inline Report validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Report report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector residual(n);
      for (std::size_t k = 0; k < n; ++k) residual[k] = g.c(i, j, k) + g.c(j, i, k);
      if (!is_zero(residual)) report.add("antisymmetry", {i, j}, std::move(residual));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector residual(n);
        for (std::size_t l = 0; l < n; ++l) {
          Rational s;
          for (std::size_t m = 0; m < n; ++m) {
            s += g.c(i, j, m) * g.c(m, k, l) + g.c(j, k, m) * g.c(m, i, l) + g.c(k, i, m) * g.c(m, j, l);
          }
          residual[l] = s;
        }
        if (!is_zero(residual)) report.add("jacobi", {i, j, k}, std::move(residual));
      }
    }
  }
  return report;
}

/// span{[e_i, e_j]}.
inline Subspace derived_subalgebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RowReducer reducer(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) reducer.add_row(g.bracket_basis(i, j));
  return Subspace::from_reducer(reducer);
}

inline bool is_perfect(const LieAlgebra& g) { return derived_subalgebra(g).dim() == g.dim(); }

/// [W, W] for a subalgebra W given by its basis.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  RowReducer reducer(g.dim());
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  for (const auto& x : av)
    for (const auto& y : bv) reducer.add_row(g.bracket(x, y));
  return Subspace::from_reducer(reducer);
}

/// g = D^0 ⊇ D^1 ⊇ ... until the series stabilizes (last entry repeats nothing).
inline std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::whole(g.dim())};
  for (;;) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

inline bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

/// K(i, j) = trace(ad e_i ad e_j).
inline Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          // (ad e_i)(a, b) = c(i, b, a); trace sums (ad e_i)(a, b) (ad e_j)(b, a).
          if (g.c(i, b, a) != 0 && g.c(j, a, b) != 0) t += g.c(i, b, a) * g.c(j, a, b);
        }
      k(i, j) = t;
      k(j, i) = t;
    }
  }
  return k;
}

/// Solvable radical via Cartan's criterion: the Killing-orthogonal complement
/// of [g, g]. Valid in characteristic zero.
inline Subspace radical(const LieAlgebra& g) {
  const Matrix k = killing_form(g);
  const Subspace d = derived_subalgebra(g);
  RowReducer reducer(g.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) reducer.add_row(k * d.basis_vector(i));
  return nullspace(reducer);
}

/// Is the subspace closed under bracketing with all of g?
inline bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (!s.contains(g.bracket(unit_vector(g.dim(), i), s.basis_vector(b)))) return false;
    }
  }
  return true;
}

/// Structure constants of a subalgebra in the coordinates of its echelon
/// basis. Throws if the subspace is not closed under the bracket.
inline LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s, std::string name) {
  const std::size_t d = s.dim();
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector coords = s.coordinates(g.bracket(s.basis_vector(i), s.basis_vector(j)));
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = coords[k];
    }
  return LieAlgebra(std::move(name), LieAlgebra::default_labels(d), std::move(c));
}

}  // namespace lieforge
