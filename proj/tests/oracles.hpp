#pragma once

// Independent reference computations for the tests. None of these call the
// elimination engine.

#include <cstddef>
#include <random>
#include <vector>

#include "lieforge/matrix.hpp"

namespace oracles {

using lieforge::Matrix;
using lieforge::Rational;

/// Determinant by cofactor expansion along the first row.
inline Rational det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, k++) = a(r, cc);
      }
    const Rational term = a(0, c) * det(minor);
    out += (c % 2 == 0) ? term : Rational(-term);
  }
  return out;
}

/// Rank as the largest k with a nonzero k x k minor. Exponential; keep
/// inputs at most 5 x 6 or so.
inline std::size_t minor_rank(const Matrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t best = 0;
  for (unsigned rmask = 1; rmask < (1u << rows); ++rmask) {
    for (unsigned cmask = 1; cmask < (1u << cols); ++cmask) {
      const std::size_t k = static_cast<std::size_t>(__builtin_popcount(rmask));
      if (k != static_cast<std::size_t>(__builtin_popcount(cmask)) || k <= best) continue;
      Matrix sub(k, k);
      std::size_t i = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!(rmask >> r & 1u)) continue;
        std::size_t j = 0;
        for (std::size_t c = 0; c < cols; ++c) {
          if (cmask >> c & 1u) sub(i, j++) = a(r, c);
        }
        ++i;
      }
      if (det(sub) != 0) best = k;
    }
  }
  return best;
}

/// Small random rational matrix with a controlled share of zeros.
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_percent = 40) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> pct(0, 99);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (pct(rng) < zero_percent) continue;
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m(r, c) = q;
    }
  return m;
}

}  // namespace oracles
