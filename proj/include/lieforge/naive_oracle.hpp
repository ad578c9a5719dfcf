#pragma once

// Reference assembler for biderivation spaces. Deliberately naive: one dense
// row per scalar constraint over the full n*n*m unknowns, every ordered basis
// triple, symmetry imposed by explicit rows. It shares nothing with
// biderivation_space() except the exact nullspace routine, so agreement of the
// two dimensions checks the optimized assembly.

#include <cstddef>

#include "lieforge/biderivations.hpp"

namespace lieforge::oracle {

inline Subspace naive_biderivation_space(const LieAlgebra& g, const Representation& rep, bool symmetric) {
  const std::size_t n = g.dim();
  const std::size_t m = rep.module_dim();
  const std::size_t unknowns = n * n * m;
  auto var = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * m + k; };

  RowReducer reducer(unknowns);
  Vector row(unknowns);
  auto clear = [&] {
    for (auto& v : row) v = 0;
  };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t l = 0; l < m; ++l) {
          // phi(x, [y,z])_l - (psi(y) phi(x,z))_l + (psi(z) phi(x,y))_l
          clear();
          for (std::size_t w = 0; w < n; ++w) row[var(x, w, l)] += g.c(y, z, w);
          for (std::size_t k = 0; k < m; ++k) {
            row[var(x, z, k)] -= rep.action(y)(l, k);
            row[var(x, y, k)] += rep.action(z)(l, k);
          }
          reducer.add_row(row);

          // phi([y,z], x)_l - (psi(y) phi(z,x))_l + (psi(z) phi(y,x))_l
          clear();
          for (std::size_t w = 0; w < n; ++w) row[var(w, x, l)] += g.c(y, z, w);
          for (std::size_t k = 0; k < m; ++k) {
            row[var(z, x, k)] -= rep.action(y)(l, k);
            row[var(y, x, k)] += rep.action(z)(l, k);
          }
          reducer.add_row(row);
        }
      }
    }
  }
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          clear();
          row[var(i, j, k)] += 1;
          row[var(j, i, k)] -= 1;
          reducer.add_row(row);
        }
  }
  return nullspace(reducer);
}

inline std::size_t naive_biderivation_dimension(const LieAlgebra& g, const Representation& rep, bool symmetric) {
  return naive_biderivation_space(g, rep, symmetric).dim();
}

}  // namespace lieforge::oracle
