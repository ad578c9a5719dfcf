#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge {

/// A representation psi: g -> gl(M), stored as the action matrices of the
/// basis elements: action(i) = psi(e_i), an m x m matrix acting on columns.
class Representation {
 public:
  Representation() = default;

  Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> action,
                 std::string name = "")
      : algebra_(std::move(algebra)),
        module_dim_(module_dim),
        action_(std::move(action)),
        name_(std::move(name)) {
    if (action_.size() != algebra_.dim()) throw Error("representation needs one matrix per basis element");
    for (const auto& a : action_) {
      if (a.rows() != module_dim_ || a.cols() != module_dim_) throw Error("action matrix must be module_dim square");
    }
  }

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<Matrix>& actions() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  /// psi(x) for an arbitrary algebra element x.
  Matrix action_of(const Vector& x) const {
    if (x.size() != algebra_.dim()) throw Error("element length must equal algebra dim");
    Matrix out(module_dim_, module_dim_);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) out = out + x[i] * action_[i];
    }
    return out;
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra_ == b.algebra_ && a.module_dim_ == b.module_dim_ && a.action_ == b.action_;
  }

 private:
  LieAlgebra algebra_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> action_;
  std::string name_;
};

/// psi([e_i, e_j]) = [psi(e_i), psi(e_j)] for i < j; residual is the
/// flattened difference matrix.
inline Report check_homomorphism(const Representation& rep) {
  const LieAlgebra& g = rep.algebra();
  Report report;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Matrix diff = rep.action_of(g.bracket_basis(i, j)) - commutator(rep.action(i), rep.action(j));
      if (!diff.is_zero()) report.add("homomorphism", {i, j}, diff.entries());
    }
  }
  return report;
}

inline Representation adjoint(const LieAlgebra& g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(g.ad(i));
  return Representation(g, g.dim(), std::move(action), "adjoint");
}

/// The zero action of g on a d-dimensional space.
inline Representation trivial_rep(const LieAlgebra& g, std::size_t d) {
  return Representation(g, d, std::vector<Matrix>(g.dim(), Matrix(d, d)), "trivial:" + std::to_string(d));
}

inline Representation direct_sum(const std::vector<Representation>& reps) {
  if (reps.empty()) throw Error("direct sum of no representations");
  const LieAlgebra& g = reps.front().algebra();
  std::size_t m = 0;
  std::string name;
  for (const auto& r : reps) {
    if (!(r.algebra() == g)) throw Error("direct sum needs representations of the same algebra");
    m += r.module_dim();
    name += (name.empty() ? "" : "+") + r.name();
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& r : reps) blocks.push_back(r.action(i));
    action.push_back(Matrix::direct_sum(blocks));
  }
  return Representation(g, m, std::move(action), name);
}

/// M^g: the common kernel of all action matrices.
inline Subspace invariants(const Representation& rep) {
  RowReducer reducer(rep.module_dim());
  for (const auto& a : rep.actions())
    for (std::size_t r = 0; r < a.rows(); ++r) reducer.add_row(a.row_view(r));
  return nullspace(reducer);
}

/// span{psi(e_i) v : all i, v in sub}.
inline Subspace action_span(const Representation& rep, const Subspace& sub) {
  if (sub.ambient_dim() != rep.module_dim()) throw Error("subspace is not in the module");
  RowReducer reducer(rep.module_dim());
  for (const auto& a : rep.actions())
    for (std::size_t b = 0; b < sub.dim(); ++b) reducer.add_row(a * sub.basis_vector(b));
  return Subspace::from_reducer(reducer);
}

/// The center of g, i.e. invariants of the adjoint representation.
inline Subspace center(const LieAlgebra& g) { return invariants(adjoint(g)); }

/// Action on an invariant subspace, in the coordinates of its echelon basis.
/// Throws if the subspace is not stable.
inline Representation restrict_rep(const Representation& rep, const Subspace& sub, std::string name) {
  const std::size_t d = sub.dim();
  std::vector<Matrix> action;
  for (const auto& a : rep.actions()) {
    Matrix m(d, d);
    for (std::size_t b = 0; b < d; ++b) m.set_col(b, sub.coordinates(a * sub.basis_vector(b)));
    action.push_back(std::move(m));
  }
  return Representation(rep.algebra(), d, std::move(action), std::move(name));
}

}  // namespace lieforge
