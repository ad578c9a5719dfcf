#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/biderivations.hpp"
#include "lieforge/cohomology.hpp"

namespace lieforge {

/// The data (F, G, Delta) describing a commutative product on s ⋉ R:
///   (a + r)∘(a' + r') = phi(a)F(a') + phi(a)G(r') + phi(a')G(r) + Delta(r)(r')
/// F is r_dim x s_dim, G is r_dim x r_dim, and delta[p] is the matrix of
/// Delta(r_p) (column q holds Delta(r_p)(r_q)).
struct FGDelta {
  Matrix F;
  Matrix G;
  std::vector<Matrix> delta;
  bool abelian_radical = false;

  static FGDelta zero(const SplitAlgebra& sp) {
    const std::size_t k = sp.s_dim();
    const std::size_t d = sp.r_dim();
    return FGDelta{Matrix(d, k), Matrix(d, d), std::vector<Matrix>(d, Matrix(d, d)), sp.radical_abelian()};
  }

  /// Delta(r)(r') for r = r_p, r' = r_q.
  Vector delta_value(std::size_t p, std::size_t q) const { return delta.at(p).col(q); }

  /// Delta(v) for an arbitrary radical vector v.
  Matrix delta_of(const Vector& v) const {
    const std::size_t d = G.rows();
    Matrix out(d, d);
    for (std::size_t p = 0; p < d; ++p) {
      if (v[p] != 0) out = out + v[p] * delta[p];
    }
    return out;
  }

  friend bool operator==(const FGDelta& a, const FGDelta& b) {
    return a.F == b.F && a.G == b.G && a.delta == b.delta && a.abelian_radical == b.abelian_radical;
  }
};

namespace detail {

inline void require_shapes(const SplitAlgebra& sp, const FGDelta& data) {
  const std::size_t k = sp.s_dim();
  const std::size_t d = sp.r_dim();
  if (data.F.rows() != d || data.F.cols() != k || data.G.rows() != d || data.G.cols() != d || data.delta.size() != d) {
    throw Error("FGDelta shape does not match the split algebra");
  }
  for (const auto& m : data.delta) {
    if (m.rows() != d || m.cols() != d) throw Error("Delta block shape does not match the radical");
  }
}

/// Evaluates the product formula without checking any condition.
inline BilinearMap assemble_product(const SplitAlgebra& sp, const FGDelta& data) {
  require_shapes(sp, data);
  const std::size_t k = sp.s_dim();
  const std::size_t d = sp.r_dim();
  const std::size_t n = k + d;
  BilinearMap out(n, n, n);
  auto put = [&](std::size_t i, std::size_t j, const Vector& rv) {
    for (std::size_t p = 0; p < d; ++p) out(i, j, k + p) += rv[p];
  };
  for (std::size_t a = 0; a < k; ++a) {
    const Matrix& pa = sp.phi.action(a);
    for (std::size_t b = 0; b < k; ++b) put(a, b, pa * data.F.col(b));
    const Matrix paG = pa * data.G;
    for (std::size_t q = 0; q < d; ++q) {
      const Vector v = paG.col(q);
      put(a, k + q, v);  // a ∘ r_q = phi(a) G r_q
      put(k + q, a, v);  // r_q ∘ a = phi(a) G r_q
    }
  }
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) put(k + p, k + q, data.delta_value(p, q));
  return out;
}

}  // namespace detail

/// Checks the conditions on (F, G, Delta). With a nonabelian radical:
///   (1) phi(a)Fa' = phi(a')Fa
///   (2) phi(a)G is a derivation of R
///   (3) Delta(r)(r') = Delta(r')(r)
///   (4) phi(a)G phi(a')(r') = phi(a')phi(a)G(r') + [phi(a)Fa', r']
///   (5) Delta(r)phi(a')(r') = phi(a')Delta(r)(r') + [phi(a')G(r), r']
///   (Delta) each Delta(r) is a derivation of R
/// With an abelian radical (detected from the radical's bracket):
///   (1) phi(a)Fa' = phi(a')Fa
///   (2) Delta(r)(r') = Delta(r')(r)
///   (3) phi(a)G phi(a')(r) = phi(a')phi(a)G(r)
///   (4) Delta(r)phi(a)(r') = phi(a)Delta(r)(r')
/// Witness indices are basis indices: s-indices for a, radical indices for r.
inline Report check_conditions(const SplitAlgebra& sp, const FGDelta& data) {
  detail::require_shapes(sp, data);
  const std::size_t k = sp.s_dim();
  const std::size_t d = sp.r_dim();
  const LieAlgebra& r = sp.r;
  const bool abelian = sp.radical_abelian();
  auto phi = [&](std::size_t a) -> const Matrix& { return sp.phi.action(a); };
  auto er = [d](std::size_t p) { return unit_vector(d, p); };
  Report report;

  // F symmetry: phi(a)F(a') = phi(a')F(a).
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Vector res = phi(a) * data.F.col(b) - phi(b) * data.F.col(a);
      if (!is_zero(res)) report.add("(1)", {a, b}, std::move(res));
    }

  const std::string delta_sym = abelian ? "(2)" : "(3)";
  if (!abelian) {
    for (std::size_t a = 0; a < k; ++a) {
      const Matrix D = phi(a) * data.G;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) {
          Vector res = D * r.bracket_basis(p, q) - r.bracket(D.col(p), er(q)) - r.bracket(er(p), D.col(q));
          if (!is_zero(res)) report.add("(2)", {a, p, q}, std::move(res));
        }
    }
  }

  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      Vector res = data.delta_value(p, q) - data.delta_value(q, p);
      if (!is_zero(res)) report.add(delta_sym, {p, q}, std::move(res));
    }

  // G condition, indices (a, a', r).
  const std::string g_cond = abelian ? "(3)" : "(4)";
  for (std::size_t a = 0; a < k; ++a) {
    const Matrix paG = phi(a) * data.G;
    const Vector Fa = data.F.col(a);
    for (std::size_t b = 0; b < k; ++b) {
      const Matrix lhs = paG * phi(b);
      const Matrix rhs = phi(b) * paG;
      const Vector paFb = phi(a) * data.F.col(b);
      for (std::size_t q = 0; q < d; ++q) {
        Vector res = lhs.col(q) - rhs.col(q);
        if (!abelian) res = res - r.bracket(paFb, er(q));
        if (!is_zero(res)) report.add(g_cond, {a, b, q}, std::move(res));
      }
    }
  }

  // Delta condition, indices (r, a', r').
  const std::string d_cond = abelian ? "(4)" : "(5)";
  for (std::size_t p = 0; p < d; ++p) {
    const Matrix& dp = data.delta[p];
    const Vector Gp = data.G.col(p);
    for (std::size_t b = 0; b < k; ++b) {
      const Matrix lhs = dp * phi(b);
      const Matrix rhs = phi(b) * dp;
      const Vector pbGp = phi(b) * Gp;
      for (std::size_t q = 0; q < d; ++q) {
        Vector res = lhs.col(q) - rhs.col(q);
        if (!abelian) res = res - r.bracket(pbGp, er(q));
        if (!is_zero(res)) report.add(d_cond, {p, b, q}, std::move(res));
      }
    }
  }

  if (!abelian) {
    for (std::size_t p = 0; p < d; ++p) {
      const Matrix& D = data.delta[p];
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = x + 1; y < d; ++y) {
          Vector res = D * r.bracket_basis(x, y) - r.bracket(D.col(x), er(y)) - r.bracket(er(x), D.col(y));
          if (!is_zero(res)) report.add("(Delta)", {p, x, y}, std::move(res));
        }
    }
  }
  (void)k;
  return report;
}

/// Assembles ∘ from (F, G, Delta). Throws ViolationError carrying the
/// condition report when a condition fails.
inline BilinearMap compose(const SplitAlgebra& sp, const FGDelta& data) {
  Report report = check_conditions(sp, data);
  if (!report.ok()) {
    const std::string what = "compose: condition " + report.violations.front().condition + " fails";
    throw ViolationError(what, std::move(report));
  }
  return detail::assemble_product(sp, data);
}

/// Recovers (F, G, Delta) from a symmetric biderivation ∘ of the total
/// algebra with values in the radical:
///   F(a) is the Whitehead vector of the cocycle a' -> a∘a',
///   G(r) is the Whitehead vector of a -> r∘a,
///   Delta(r)(r') = r∘r'.
/// F and G are the canonical solutions of the stacked Whitehead systems.
inline FGDelta decompose(const SplitAlgebra& sp, const BilinearMap& product) {
  const std::size_t k = sp.s_dim();
  const std::size_t d = sp.r_dim();
  const std::size_t n = k + d;
  if (product.left_dim() != n || product.right_dim() != n || product.module_dim() != n) {
    throw Error("decompose: product shape does not match the total algebra");
  }
  if (Report rep = check_biderivation(sp.total, adjoint(sp.total), product, true); !rep.ok()) {
    throw ViolationError("decompose: product is not a symmetric biderivation of the total algebra", std::move(rep));
  }
  Report escape;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < k; ++a) {
        if (product(i, j, a) != 0) {
          Vector res(n);
          for (std::size_t l = 0; l < k; ++l) res[l] = product(i, j, l);
          escape.add("image-in-radical", {i, j}, std::move(res));
          break;
        }
      }
  if (!escape.ok()) throw ViolationError("decompose: image not in radical", std::move(escape));

  auto radical_part = [&](std::size_t i, std::size_t j) {
    Vector v(d);
    for (std::size_t p = 0; p < d; ++p) v[p] = product(i, j, k + p);
    return v;
  };

  FGDelta out = FGDelta::zero(sp);
  for (std::size_t a = 0; a < k; ++a) {
    LinearMapToModule f{Matrix(d, k)};
    for (std::size_t b = 0; b < k; ++b) f.matrix.set_col(b, radical_part(a, b));
    auto v = whitehead_solve(f, sp.phi);
    if (!v) {
      throw ViolationError("decompose: Whitehead system inconsistent for cocycle a' -> " + sp.s.labels()[a] + "∘a'", {});
    }
    out.F.set_col(a, *v);
  }
  for (std::size_t p = 0; p < d; ++p) {
    LinearMapToModule f{Matrix(d, k)};
    for (std::size_t b = 0; b < k; ++b) f.matrix.set_col(b, radical_part(k + p, b));
    auto v = whitehead_solve(f, sp.phi);
    if (!v) {
      throw ViolationError("decompose: Whitehead system inconsistent for cocycle a -> " + sp.r.labels()[p] + "∘a", {});
    }
    out.G.set_col(p, *v);
  }
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) out.delta[p].set_col(q, radical_part(k + p, k + q));
  return out;
}

/// Space of F: s -> R with phi(a)F(a') = phi(a')F(a), flattened r_dim x s_dim.
inline Subspace admissible_f_space(const SplitAlgebra& sp) {
  const std::size_t k = sp.s_dim();
  const std::size_t d = sp.r_dim();
  auto idx = [k](std::size_t p, std::size_t a) { return p * k + a; };
  RowReducer reducer(d * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t l = 0; l < d; ++l) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t p = 0; p < d; ++p) {
          const Rational& pa = sp.phi.action(a)(l, p);
          const Rational& pb = sp.phi.action(b)(l, p);
          if (pa != 0) terms.emplace_back(idx(p, b), pa);
          if (pb != 0) terms.emplace_back(idx(p, a), -pb);
        }
        if (!terms.empty()) reducer.add_terms(std::move(terms));
      }
  return nullspace(reducer);
}

}  // namespace lieforge
