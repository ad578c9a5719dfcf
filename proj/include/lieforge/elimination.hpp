#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lieforge/matrix.hpp"
#include "lieforge/rational.hpp"

namespace lieforge {

/// Reduced row-echelon form together with its pivot columns.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

namespace detail {

/// Sparse integer row, sorted by column, primitive (content 1) with a
/// positive leading coefficient. The empty row is zero.
using IntRow = std::vector<std::pair<std::size_t, Integer>>;

inline void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

/// Returns a*x - b*y over sparse rows.
inline IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Eliminates column `col` of `row` using `pivot_row`, whose entry at `col`
/// is `p`. Keeps the result integral and primitive.
inline void eliminate(IntRow& row, const Integer& a, const IntRow& pivot_row, const Integer& p) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
  Integer mp = p / g;
  Integer ma = a / g;
  row = combine(mp, row, ma, pivot_row);
  make_primitive(row);
}

inline const Integer* entry_at(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

/// Scales a rational sparse row to an integer primitive row.
inline IntRow to_int_row(std::vector<std::pair<std::size_t, Rational>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Rational>> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  Integer den = 1;
  for (const auto& [c, v] : merged) {
    if (v != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  IntRow row;
  for (const auto& [c, v] : merged) {
    if (v == 0) continue;
    Integer scaled = v.get_num() * (den / v.get_den());
    row.emplace_back(c, std::move(scaled));
  }
  make_primitive(row);
  return row;
}

}  // namespace detail

/// Incremental exact row reduction. Rows are fed one at a time; each is
/// reduced against the pivot rows collected so far and kept if a nonzero
/// remainder survives. Arithmetic is fraction-free: rows are integral and
/// divided by their content after every elimination step.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols), by_pivot_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }
  std::size_t rows_seen() const { return rows_seen_; }

  /// Adds a row given as (column, value) terms; repeated columns are summed.
  void add_terms(std::vector<std::pair<std::size_t, Rational>> terms) {
    ++rows_seen_;
    if (rank_ == cols_) return;
    for (const auto& t : terms) {
      if (t.first >= cols_) throw Error("row term column out of range");
    }
    insert(detail::to_int_row(std::move(terms)));
  }

  void add_row(std::span<const Rational> dense) {
    if (dense.size() != cols_) throw Error("row length does not match column count");
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (std::size_t c = 0; c < dense.size(); ++c) {
      if (dense[c] != 0) terms.emplace_back(c, dense[c]);
    }
    add_terms(std::move(terms));
  }

  /// Reduced row-echelon form of everything added so far (nonzero rows only).
  EchelonForm echelon() const {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (by_pivot_[c]) pivots.push_back(c);
    }
    std::vector<detail::IntRow> rows;
    rows.reserve(pivots.size());
    for (auto c : pivots) rows.push_back(*by_pivot_[c]);

    // Back substitution from the bottom so every row used is already reduced.
    if (pivots.size() < cols_) {
      std::vector<std::ptrdiff_t> row_of(cols_, -1);
      for (std::size_t i = 0; i < pivots.size(); ++i) row_of[pivots[i]] = static_cast<std::ptrdiff_t>(i);
      for (std::size_t i = pivots.size(); i-- > 0;) {
        for (;;) {
          auto& row = rows[i];
          auto it = std::find_if(row.begin() + 1, row.end(),
                                 [&](const auto& e) { return row_of[e.first] >= 0; });
          if (it == row.end()) break;
          const auto& other = rows[static_cast<std::size_t>(row_of[it->first])];
          Integer a = it->second;
          detail::eliminate(row, a, other, other.front().second);
        }
      }
    }

    EchelonForm out;
    out.rank = pivots.size();
    out.pivots = pivots;
    out.reduced = Matrix(pivots.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (pivots.size() == cols_) {
        out.reduced(i, pivots[i]) = 1;
        continue;
      }
      const Integer& lead = rows[i].front().second;
      for (const auto& [c, v] : rows[i]) {
        Rational q(v, lead);
        q.canonicalize();
        out.reduced(i, c) = q;
      }
    }
    return out;
  }

 private:
  void insert(detail::IntRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto& slot = by_pivot_[lead];
      if (!slot) {
        slot = std::move(row);
        ++rank_;
        return;
      }
      Integer a = row.front().second;
      detail::eliminate(row, a, *slot, slot->front().second);
    }
  }

  std::size_t cols_;
  std::vector<std::optional<detail::IntRow>> by_pivot_;
  std::size_t rank_ = 0;
  std::size_t rows_seen_ = 0;
};

/// Reduced row-echelon form of `m`, same shape as `m` (zero rows at the
/// bottom). Pivots are the leading columns of the nonzero rows.
inline EchelonForm rref(const Matrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.add_row(m.row_view(r));
  EchelonForm e = reducer.echelon();
  Matrix full(m.rows(), m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) full(r, c) = e.reduced(r, c);
  e.reduced = std::move(full);
  return e;
}

inline std::size_t rank(const Matrix& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.add_row(m.row_view(r));
  return reducer.rank();
}

/// Some x with a*x = b, or nothing when b is outside the column space. The
/// returned x is zero at every non-pivot coordinate.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error("solve: right-hand side length does not match rows");
  const std::size_t n = a.cols();
  RowReducer reducer(n + 1);
  Vector row(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) row[c] = a(r, c);
    row[n] = b[r];
    reducer.add_row(row);
  }
  const EchelonForm e = reducer.echelon();
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced(i, n);
  return x;
}

}  // namespace lieforge
