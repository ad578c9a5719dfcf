#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lieforge/split_algebra.hpp"

namespace lieforge {

/// Linear map from an algebra of dimension source_dim() into a module:
/// column j is the image of e_j.
struct LinearMapToModule {
  Matrix matrix;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  Vector image(std::size_t j) const { return matrix.col(j); }
  Vector operator()(const Vector& x) const { return matrix * x; }
};

/// Row-major flattening used for every "space of maps" result: entry (k, j)
/// of a rows x cols matrix sits at k * cols + j.
inline Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error("unflatten: length does not match shape");
  return Matrix(rows, cols, v);
}

inline Vector flatten(const Matrix& m) { return m.entries(); }

/// Der(g): all D with D[x, y] = [Dx, y] + [x, Dy], as a subspace of
/// flattened n x n matrices.
inline Subspace derivation_space(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto idx = [n](std::size_t row, std::size_t col) { return row * n + col; };
  RowReducer reducer(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t l = 0; l < n; ++l) {
          if (g.c(i, j, l) != 0) terms.emplace_back(idx(k, l), g.c(i, j, l));
        }
        for (std::size_t p = 0; p < n; ++p) {
          if (g.c(p, j, k) != 0) terms.emplace_back(idx(p, i), -g.c(p, j, k));
          if (g.c(i, p, k) != 0) terms.emplace_back(idx(p, j), -g.c(i, p, k));
        }
        if (!terms.empty()) reducer.add_terms(std::move(terms));
      }
    }
  }
  return nullspace(reducer);
}

/// Z^1(g, M): maps f with f([x, y]) = psi(x) f(y) - psi(y) f(x), flattened
/// as m x n matrices.
inline Subspace z1(const Representation& rep) {
  const LieAlgebra& g = rep.algebra();
  const std::size_t n = g.dim();
  const std::size_t m = rep.module_dim();
  auto idx = [n](std::size_t k, std::size_t j) { return k * n + j; };
  RowReducer reducer(m * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = 0; l < m; ++l) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t w = 0; w < n; ++w) {
          if (g.c(i, j, w) != 0) terms.emplace_back(idx(l, w), g.c(i, j, w));
        }
        for (std::size_t k = 0; k < m; ++k) {
          if (rep.action(i)(l, k) != 0) terms.emplace_back(idx(k, j), -rep.action(i)(l, k));
          if (rep.action(j)(l, k) != 0) terms.emplace_back(idx(k, i), rep.action(j)(l, k));
        }
        if (!terms.empty()) reducer.add_terms(std::move(terms));
      }
    }
  }
  return nullspace(reducer);
}

/// B^1(g, M) = {a -> psi(a) v : v in M}.
inline Subspace b1(const Representation& rep) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.module_dim();
  std::vector<Vector> gens;
  for (std::size_t p = 0; p < m; ++p) {
    Vector f(m * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) f[k * n + j] = rep.action(j)(k, p);
    gens.push_back(std::move(f));
  }
  return Subspace::span(m * n, gens);
}

inline Subspace z1(const LieAlgebra& g, const Representation& rep) {
  if (!(rep.algebra() == g)) throw Error("z1: representation is not over this algebra");
  return z1(rep);
}

inline Subspace b1(const LieAlgebra& g, const Representation& rep) {
  if (!(rep.algebra() == g)) throw Error("b1: representation is not over this algebra");
  return b1(rep);
}

/// Finds r with f(a) = psi(a) r for every basis a. Returns nothing when the
/// stacked system is inconsistent, which for semisimple g means f is not a
/// cocycle. Among solutions, the one that vanishes off the pivot columns.
inline std::optional<Vector> whitehead_solve(const LinearMapToModule& f, const Representation& rep) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.module_dim();
  if (f.source_dim() != n || f.target_dim() != m) throw Error("whitehead_solve: map shape does not match representation");
  Matrix stacked = Matrix::vstack(rep.actions(), m);
  Vector rhs;
  rhs.reserve(n * m);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = f.image(j);
    rhs.insert(rhs.end(), col.begin(), col.end());
  }
  return solve(stacked, rhs);
}

/// The total algebra of a split acting on its radical: s through phi and
/// the radical through its own adjoint action.
inline Representation radical_module(const SplitAlgebra& sp) {
  std::vector<Matrix> action = sp.phi.actions();
  for (std::size_t p = 0; p < sp.r_dim(); ++p) action.push_back(sp.r.ad(p));
  return Representation(sp.total, sp.r_dim(), std::move(action), "radical");
}

/// Der(g, R(g)) as Z^1 of the radical module, flattened r_dim x dim.
inline Subspace derivations_into_radical(const SplitAlgebra& sp) { return z1(radical_module(sp)); }

/// D(a + r) = f(a) + d(r).
struct SplitDerivation {
  LinearMapToModule f;  // s -> R
  Matrix d;             // R -> R
};

struct SplitExtraction {
  std::optional<SplitDerivation> split;
  Report report;
};

/// Splits D: g -> R into its s and R blocks and checks
///   (2) d([r, r']) = [d(r), r'] + [r, d(r')]
///   (3) f([a, a']) = phi(a) f(a') - phi(a') f(a)
///   (4) d phi(a)(r) = phi(a) d(r) + [f(a), r]
/// The split is returned only when all three hold.
inline SplitExtraction split_derivation_extract(const SplitAlgebra& sp, const LinearMapToModule& D) {
  const std::size_t k = sp.s_dim();
  const std::size_t dr = sp.r_dim();
  if (D.source_dim() != sp.dim() || D.target_dim() != dr) {
    throw Error("split_derivation_extract: D must map the total algebra into radical coordinates");
  }
  const Matrix f = D.matrix.block(0, 0, dr, k);
  const Matrix d = D.matrix.block(0, k, dr, dr);
  const LieAlgebra& r = sp.r;

  SplitExtraction out;
  for (std::size_t p = 0; p < dr; ++p) {
    for (std::size_t q = p + 1; q < dr; ++q) {
      const Vector lhs = d * r.bracket_basis(p, q);
      const Vector rhs = r.bracket(d.col(p), unit_vector(dr, q)) + r.bracket(unit_vector(dr, p), d.col(q));
      if (Vector res = lhs - rhs; !is_zero(res)) out.report.add("(2)", {p, q}, std::move(res));
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const Vector lhs = f * sp.s.bracket_basis(a, b);
      const Vector rhs = sp.phi.action(a) * f.col(b) - sp.phi.action(b) * f.col(a);
      if (Vector res = lhs - rhs; !is_zero(res)) out.report.add("(3)", {a, b}, std::move(res));
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    const Matrix& act = sp.phi.action(a);
    for (std::size_t p = 0; p < dr; ++p) {
      const Vector lhs = d * act.col(p);
      const Vector rhs = act * d.col(p) + r.bracket(f.col(a), unit_vector(dr, p));
      if (Vector res = lhs - rhs; !is_zero(res)) out.report.add("(4)", {a, p}, std::move(res));
    }
  }
  if (out.report.ok()) out.split = SplitDerivation{LinearMapToModule{f}, d};
  return out;
}

}  // namespace lieforge
