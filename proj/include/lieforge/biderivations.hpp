#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/representation.hpp"

namespace lieforge {

/// Bilinear map g x g -> M stored as values(i, j, k) = coefficient of m_k in
/// phi(e_i, e_j). Also used for commutative products g x g -> g.
class BilinearMap {
 public:
  BilinearMap() = default;

  BilinearMap(std::size_t left_dim, std::size_t right_dim, std::size_t module_dim)
      : left_(left_dim), right_(right_dim), module_(module_dim), values_(left_dim * right_dim * module_dim) {}

  BilinearMap(std::size_t left_dim, std::size_t right_dim, std::size_t module_dim, std::vector<Rational> values)
      : left_(left_dim), right_(right_dim), module_(module_dim), values_(std::move(values)) {
    if (values_.size() != left_ * right_ * module_) throw Error("bilinear map value count does not match shape");
  }

  /// The Lie bracket of g viewed as a bilinear map into the adjoint module.
  static BilinearMap from_bracket(const LieAlgebra& g) {
    return BilinearMap(g.dim(), g.dim(), g.dim(), g.constants());
  }

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t module_dim() const { return module_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return values_[(i * right_ + j) * module_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(i * right_ + j) * module_ + k];
  }

  /// phi(e_i, e_j).
  Vector value(std::size_t i, std::size_t j) const {
    const auto begin = values_.begin() + static_cast<std::ptrdiff_t>((i * right_ + j) * module_);
    return Vector(begin, begin + static_cast<std::ptrdiff_t>(module_));
  }

  void set_value(std::size_t i, std::size_t j, const Vector& v) {
    if (v.size() != module_) throw Error("value length must equal module_dim");
    for (std::size_t k = 0; k < module_; ++k) (*this)(i, j, k) = v[k];
  }

  Vector operator()(const Vector& x, const Vector& y) const {
    if (x.size() != left_ || y.size() != right_) throw Error("bilinear map argument length mismatch");
    Vector out(module_);
    for (std::size_t i = 0; i < left_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < right_; ++j) {
        if (y[j] == 0) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < module_; ++k) {
          const Rational& v = (*this)(i, j, k);
          if (v != 0) out[k] += xy * v;
        }
      }
    }
    return out;
  }

  bool is_zero() const { return lieforge::is_zero(values_); }

  bool is_symmetric() const {
    if (left_ != right_) return false;
    for (std::size_t i = 0; i < left_; ++i)
      for (std::size_t j = i + 1; j < right_; ++j)
        for (std::size_t k = 0; k < module_; ++k) {
          if ((*this)(i, j, k) != (*this)(j, i, k)) return false;
        }
    return true;
  }

  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.module_ == b.module_ && a.values_ == b.values_;
  }

  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) {
    if (a.values_.size() != b.values_.size()) throw Error("bilinear map shape mismatch");
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
    return a;
  }

  friend BilinearMap operator*(const Rational& s, BilinearMap a) {
    for (auto& v : a.values_) v *= s;
    return a;
  }

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t module_ = 0;
  std::vector<Rational> values_;
};

/// A computed space of (symmetric) biderivations.
struct SpaceReport {
  std::size_t dimension = 0;
  std::vector<BilinearMap> basis;
  std::string algebra_name;
  std::string module_name;
  bool symmetric = false;
  std::size_t constraint_rows = 0;
  std::size_t constraint_cols = 0;

  /// Span of the basis in flattened n*n*m coordinates.
  Subspace flattened(std::size_t ambient) const {
    std::vector<Vector> gens;
    for (const auto& b : basis) gens.push_back(b.values());
    return Subspace::span(ambient, gens);
  }
};

namespace detail {

/// Unknown layout for the biderivation solver. The symmetric layout has one
/// block per unordered pair i <= j, so symmetry costs no constraint rows.
struct BiderivationLayout {
  std::size_t n;
  std::size_t m;
  bool symmetric;

  std::size_t pair(std::size_t i, std::size_t j) const {
    if (!symmetric) return i * n + j;
    if (i > j) std::swap(i, j);
    return i * (2 * n - i + 1) / 2 + (j - i);
  }
  std::size_t var(std::size_t i, std::size_t j, std::size_t k) const { return pair(i, j) * m + k; }
  std::size_t unknowns() const { return (symmetric ? n * (n + 1) / 2 : n * n) * m; }

  BilinearMap expand(const Vector& v) const {
    BilinearMap b(n, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) b(i, j, k) = v[var(i, j, k)];
    return b;
  }
};

}  // namespace detail

/// Solves for all bilinear phi: g x g -> M with
///   phi(x, [y, z]) = psi(y) phi(x, z) - psi(z) phi(x, y)
///   phi([y, z], x) = psi(y) phi(z, x) - psi(z) phi(y, x)
/// over basis triples (x, y < z). Both identities are always emitted; they
/// coincide only for symmetric phi. Rows are generated in (slot, x, y, z, l)
/// order.
inline SpaceReport biderivation_space(const LieAlgebra& g, const Representation& rep, bool symmetric) {
  if (rep.algebra().dim() != g.dim() || !(rep.algebra() == g)) {
    throw Error("biderivation_space: representation is not over this algebra");
  }
  const std::size_t n = g.dim();
  const std::size_t m = rep.module_dim();
  const detail::BiderivationLayout layout{n, m, symmetric};
  RowReducer reducer(layout.unknowns());

  for (int slot = 0; slot < 2; ++slot) {
    // slot 0: phi(x, .) is a derivation; slot 1: phi(., x) is.
    auto var = [&](std::size_t x, std::size_t w, std::size_t k) {
      return slot == 0 ? layout.var(x, w, k) : layout.var(w, x, k);
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = y + 1; z < n; ++z) {
          const Matrix& py = rep.action(y);
          const Matrix& pz = rep.action(z);
          for (std::size_t l = 0; l < m; ++l) {
            std::vector<std::pair<std::size_t, Rational>> terms;
            for (std::size_t w = 0; w < n; ++w) {
              if (g.c(y, z, w) != 0) terms.emplace_back(var(x, w, l), g.c(y, z, w));
            }
            for (std::size_t k = 0; k < m; ++k) {
              if (py(l, k) != 0) terms.emplace_back(var(x, z, k), -py(l, k));
              if (pz(l, k) != 0) terms.emplace_back(var(x, y, k), pz(l, k));
            }
            if (!terms.empty()) reducer.add_terms(std::move(terms));
          }
        }
      }
    }
  }

  const Subspace space = nullspace(reducer);
  SpaceReport report;
  report.dimension = space.dim();
  report.algebra_name = g.name();
  report.module_name = rep.name();
  report.symmetric = symmetric;
  report.constraint_rows = 2 * n * (n * (n - (n > 0 ? 1 : 0)) / 2) * m;
  report.constraint_cols = layout.unknowns();
  for (std::size_t i = 0; i < space.dim(); ++i) report.basis.push_back(layout.expand(space.basis_vector(i)));
  return report;
}

/// Symmetric biderivations with values in the adjoint module, i.e. the
/// commutative products x∘y with x∘[y,z] = [x∘y, z] + [y, x∘z].
inline SpaceReport abd_space(const LieAlgebra& g) { return biderivation_space(g, adjoint(g), true); }

/// Evaluates both biderivation identities on every basis triple (x, y < z);
/// with `symmetric`, also phi(e_i, e_j) = phi(e_j, e_i). Violations are
/// tagged "slot1", "slot2" (indices x, y, z) and "symmetry" (indices i, j).
inline Report check_biderivation(const LieAlgebra& g, const Representation& rep, const BilinearMap& phi,
                                 bool symmetric) {
  const std::size_t n = g.dim();
  const std::size_t m = rep.module_dim();
  if (phi.left_dim() != n || phi.right_dim() != n || phi.module_dim() != m || rep.algebra().dim() != n) {
    throw Error("check_biderivation: shape mismatch between algebra, module and map");
  }
  Report report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        const Vector yz = g.bracket_basis(y, z);
        const Vector ex = unit_vector(n, x);
        {
          const Vector lhs = phi(ex, yz);
          const Vector rhs = rep.action(y) * phi.value(x, z) - rep.action(z) * phi.value(x, y);
          if (Vector res = lhs - rhs; !is_zero(res)) report.add("slot1", {x, y, z}, std::move(res));
        }
        {
          const Vector lhs = phi(yz, ex);
          const Vector rhs = rep.action(y) * phi.value(z, x) - rep.action(z) * phi.value(y, x);
          if (Vector res = lhs - rhs; !is_zero(res)) report.add("slot2", {x, y, z}, std::move(res));
        }
      }
    }
  }
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (Vector res = phi.value(i, j) - phi.value(j, i); !is_zero(res)) report.add("symmetry", {i, j}, std::move(res));
      }
  }
  return report;
}

/// A_BD conditions for ∘ plus the CPA identity [x,y]∘z = x∘(y∘z) - y∘(x∘z)
/// on all basis triples (reported as "cpa" with indices x < y, z).
inline Report check_cpa(const LieAlgebra& g, const BilinearMap& product) {
  const std::size_t n = g.dim();
  Report report = check_biderivation(g, adjoint(g), product, true);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Vector ez = unit_vector(n, z);
        const Vector lhs = product(g.bracket_basis(x, y), ez);
        const Vector rhs = product(unit_vector(n, x), product.value(y, z)) - product(unit_vector(n, y), product.value(x, z));
        if (Vector res = lhs - rhs; !is_zero(res)) report.add("cpa", {x, y, z}, std::move(res));
      }
    }
  }
  return report;
}

}  // namespace lieforge
