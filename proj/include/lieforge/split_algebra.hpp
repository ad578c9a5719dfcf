#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/representation.hpp"

namespace lieforge {

/// A Levi-split algebra g = s ⋉_phi r. The total algebra uses the basis
/// (s-basis, r-basis), s-block first.
struct SplitAlgebra {
  LieAlgebra s;
  LieAlgebra r;
  Representation phi;  // s acting on the underlying space of r
  LieAlgebra total;
  bool radical_solvable = true;

  std::size_t s_dim() const { return s.dim(); }
  std::size_t r_dim() const { return r.dim(); }
  std::size_t dim() const { return total.dim(); }
  bool radical_abelian() const { return r.is_abelian(); }

  /// Total-algebra coordinates of a radical vector.
  Vector embed_r(const Vector& v) const {
    Vector out(dim());
    for (std::size_t p = 0; p < r_dim(); ++p) out[s_dim() + p] = v.at(p);
    return out;
  }
};

/// phi(a)[x, y] = [phi(a)x, y] + [x, phi(a)y] on r for each s-basis a and
/// x < y in r (indices reported as (a, x, y)).
inline Report check_acts_by_derivations(const Representation& phi, const LieAlgebra& r) {
  Report report;
  const std::size_t d = r.dim();
  for (std::size_t a = 0; a < phi.algebra().dim(); ++a) {
    const Matrix& act = phi.action(a);
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = x + 1; y < d; ++y) {
        const Vector lhs = act * r.bracket_basis(x, y);
        const Vector rhs = r.bracket(act.col(x), unit_vector(d, y)) + r.bracket(unit_vector(d, x), act.col(y));
        const Vector residual = lhs - rhs;
        if (!is_zero(residual)) report.add("phi-derivation", {a, x, y}, residual);
      }
    }
  }
  return report;
}

/// Assembles s ⋉_phi r. Throws ViolationError when some phi(a) is not a
/// derivation of r or phi is not a homomorphism; either breaks Jacobi.
inline SplitAlgebra semidirect(const LieAlgebra& s, const Representation& phi, const LieAlgebra& r,
                               std::string name = "") {
  if (phi.algebra().dim() != s.dim() || !(phi.algebra() == s)) {
    throw Error("semidirect: phi is not a representation of s");
  }
  if (phi.module_dim() != r.dim()) throw Error("semidirect: phi module dimension differs from dim r");
  if (Report rep = check_acts_by_derivations(phi, r); !rep.ok()) {
    const auto& w = rep.violations.front();
    throw ViolationError("semidirect: phi(" + s.labels()[w.indices[0]] + ") is not a derivation of r at pair (" +
                             std::to_string(w.indices[1]) + ", " + std::to_string(w.indices[2]) + ")",
                         rep);
  }
  if (Report rep = check_homomorphism(phi); !rep.ok()) {
    throw ViolationError("semidirect: phi is not a homomorphism", rep);
  }

  const std::size_t k = s.dim();
  const std::size_t d = r.dim();
  const std::size_t n = k + d;
  std::vector<Rational> c(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t l) -> Rational& { return c[(i * n + j) * n + l]; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) at(i, j, l) = s.c(i, j, l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        const Rational& v = phi.action(i)(q, p);
        if (v == 0) continue;
        at(i, k + p, k + q) = v;
        at(k + p, i, k + q) = -v;
      }
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t l = 0; l < d; ++l) at(k + p, k + q, k + l) = r.c(p, q, l);

  std::vector<std::string> labels = s.labels();
  labels.insert(labels.end(), r.labels().begin(), r.labels().end());
  if (name.empty()) name = s.name() + "|x" + (phi.name().empty() ? r.name() : phi.name());

  SplitAlgebra out{s, r, phi, LieAlgebra(std::move(name), std::move(labels), std::move(c)), true};
  out.radical_solvable = is_solvable(r);
  return out;
}

/// Recovers the split from a total algebra whose first s_dim basis vectors
/// span a subalgebra s and whose remaining ones span an ideal r.
inline SplitAlgebra split_from_total(const LieAlgebra& total, std::size_t s_dim) {
  const std::size_t n = total.dim();
  if (s_dim > n) throw Error("split: s_dim exceeds algebra dimension");
  const std::size_t d = n - s_dim;
  std::vector<Rational> cs(s_dim * s_dim * s_dim);
  std::vector<Rational> cr(d * d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Rational& v = total.c(i, j, l);
        if (v == 0) continue;
        const bool is = i < s_dim;
        const bool js = j < s_dim;
        const bool ls = l < s_dim;
        if (is && js) {
          if (!ls) throw Error("split: the s block is not a subalgebra");
          cs[(i * s_dim + j) * s_dim + l] = v;
        } else if (ls) {
          throw Error("split: the radical block is not an ideal");
        } else if (!is && !js) {
          cr[((i - s_dim) * d + (j - s_dim)) * d + (l - s_dim)] = v;
        }
      }
  std::vector<std::string> s_labels(total.labels().begin(), total.labels().begin() + static_cast<std::ptrdiff_t>(s_dim));
  std::vector<std::string> r_labels(total.labels().begin() + static_cast<std::ptrdiff_t>(s_dim), total.labels().end());
  LieAlgebra s(total.name() + ":s", std::move(s_labels), std::move(cs));
  LieAlgebra r(total.name() + ":r", std::move(r_labels), std::move(cr));
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < s_dim; ++i) action.push_back(total.ad(i).block(s_dim, s_dim, d, d));
  Representation phi(s, d, std::move(action), "phi");
  SplitAlgebra out{s, r, phi, total, true};
  out.radical_solvable = is_solvable(r);
  return out;
}

}  // namespace lieforge
