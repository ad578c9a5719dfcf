#pragma once

// JSON encodings. Rationals are strings "p" or "p/q" (plain JSON integers are
// accepted on input). Brackets and bilinear maps list only nonzero entries.

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lieforge/biderivations.hpp"
#include "lieforge/fgdelta.hpp"
#include "lieforge/report.hpp"

namespace lieforge::io {

using Json = nlohmann::ordered_json;

/// An algebra file: the algebra plus optional split metadata.
struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<std::size_t> s_dim;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

inline std::size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  fail(where, "expected a rational string \"p/q\" or an integer");
}

inline Json coeff_list(const Vector& v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) out.push_back(Json::array({k, to_string(v[k])}));
  }
  return out;
}

/// Reads [[k, "p/q"], ...] into a vector of length `len`.
inline Vector read_coeffs(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [k, coefficient] pairs");
  Vector v(len);
  std::set<std::size_t> seen;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    if (!j[t].is_array() || j[t].size() != 2) fail(at, "expected [k, coefficient]");
    const std::size_t k = as_index(j[t][0], at);
    if (k >= len) fail(at, "index " + std::to_string(k) + " out of range");
    if (!seen.insert(k).second) fail(at, "duplicate index " + std::to_string(k));
    v[k] = as_rational(j[t][1], at);
  }
  return v;
}

}  // namespace detail

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

inline Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) detail::fail(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) detail::fail(at, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = detail::as_rational(j[r][c], at + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline Json algebra_to_json(const LieAlgebra& g, std::optional<std::size_t> s_dim = std::nullopt) {
  const std::size_t n = g.dim();
  Json out;
  out["name"] = g.name();
  out["dim"] = n;
  out["basis"] = g.labels();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      brackets.push_back(Json{{"i", i}, {"j", j}, {"coeffs", detail::coeff_list(v)}});
    }
  out["brackets"] = std::move(brackets);
  if (s_dim) out["split"] = Json{{"s_dim", *s_dim}};
  return out;
}

/// Brackets must be listed with i < j; the other half follows by
/// antisymmetry. Errors name the offending position, e.g. "brackets[2]".
inline AlgebraFile algebra_from_json(const Json& j) {
  const std::size_t n = detail::as_index(detail::field(j, "dim", "algebra"), "dim");
  if (n == 0) detail::fail("dim", "must be positive");
  std::string name = "algebra";
  if (j.contains("name")) {
    if (!j["name"].is_string()) detail::fail("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  std::vector<std::string> labels = LieAlgebra::default_labels(n);
  if (j.contains("basis")) {
    const Json& b = j["basis"];
    if (!b.is_array() || b.size() != n) detail::fail("basis", "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) detail::fail("basis[" + std::to_string(i) + "]", "expected a string");
      labels[i] = b[i].get<std::string>();
    }
  }
  const Json& br = detail::field(j, "brackets", "algebra");
  if (!br.is_array()) detail::fail("brackets", "expected an array");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < br.size(); ++t) {
    const std::string at = "brackets[" + std::to_string(t) + "]";
    const std::size_t i = detail::as_index(detail::field(br[t], "i", at), at + ".i");
    const std::size_t jj = detail::as_index(detail::field(br[t], "j", at), at + ".j");
    if (i >= jj) detail::fail(at, "entries need i < j (got i=" + std::to_string(i) + ", j=" + std::to_string(jj) + ")");
    if (jj >= n) detail::fail(at, "index " + std::to_string(jj) + " out of range");
    if (!seen.insert({i, jj}).second) detail::fail(at, "duplicate pair");
    const Vector v = detail::read_coeffs(detail::field(br[t], "coeffs", at), n, at + ".coeffs");
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] != 0) entries.emplace_back(i, jj, k, v[k]);
    }
  }
  AlgebraFile out{LieAlgebra::from_brackets(name, std::move(labels), entries), std::nullopt};
  if (j.contains("split")) {
    const std::size_t k = detail::as_index(detail::field(j["split"], "s_dim", "split"), "split.s_dim");
    if (k > n) detail::fail("split.s_dim", "exceeds dim");
    out.s_dim = k;
  }
  return out;
}

inline Json representation_to_json(const Representation& rep) {
  Json out;
  out["algebra"] = rep.algebra().name();
  out["name"] = rep.name();
  out["module_dim"] = rep.module_dim();
  Json action = Json::array();
  for (const auto& a : rep.actions()) action.push_back(matrix_to_json(a));
  out["action"] = std::move(action);
  return out;
}

/// Number of action matrices in a representation file, so the caller can
/// decide which algebra it is over.
inline std::size_t representation_arity(const Json& j) {
  const Json& a = detail::field(j, "action", "representation");
  if (!a.is_array()) detail::fail("action", "expected an array of matrices");
  return a.size();
}

inline Representation representation_from_json(const Json& j, const LieAlgebra& g) {
  const std::size_t m = detail::as_index(detail::field(j, "module_dim", "representation"), "module_dim");
  const Json& a = detail::field(j, "action", "representation");
  if (!a.is_array() || a.size() != g.dim()) {
    detail::fail("action", "expected " + std::to_string(g.dim()) + " matrices, one per basis element");
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(matrix_from_json(a[i], m, m, "action[" + std::to_string(i) + "]"));
  std::string name = "module";
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return Representation(g, m, std::move(action), std::move(name));
}

inline Json bilinear_to_json(const BilinearMap& b) {
  Json out;
  out["left_dim"] = b.left_dim();
  out["right_dim"] = b.right_dim();
  out["module_dim"] = b.module_dim();
  Json values = Json::array();
  for (std::size_t i = 0; i < b.left_dim(); ++i)
    for (std::size_t j = 0; j < b.right_dim(); ++j) {
      const Vector v = b.value(i, j);
      if (is_zero(v)) continue;
      values.push_back(Json{{"i", i}, {"j", j}, {"coeffs", detail::coeff_list(v)}});
    }
  out["values"] = std::move(values);
  return out;
}

inline BilinearMap bilinear_from_json(const Json& j) {
  const std::size_t l = detail::as_index(detail::field(j, "left_dim", "map"), "left_dim");
  const std::size_t r = detail::as_index(detail::field(j, "right_dim", "map"), "right_dim");
  const std::size_t m = detail::as_index(detail::field(j, "module_dim", "map"), "module_dim");
  BilinearMap out(l, r, m);
  const Json& vals = detail::field(j, "values", "map");
  if (!vals.is_array()) detail::fail("values", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < vals.size(); ++t) {
    const std::string at = "values[" + std::to_string(t) + "]";
    const std::size_t i = detail::as_index(detail::field(vals[t], "i", at), at + ".i");
    const std::size_t jj = detail::as_index(detail::field(vals[t], "j", at), at + ".j");
    if (i >= l || jj >= r) detail::fail(at, "index out of range");
    if (!seen.insert({i, jj}).second) detail::fail(at, "duplicate pair");
    out.set_value(i, jj, detail::read_coeffs(detail::field(vals[t], "coeffs", at), m, at + ".coeffs"));
  }
  return out;
}

inline Json fgdelta_to_json(const FGDelta& d) {
  Json out;
  out["s_dim"] = d.F.cols();
  out["r_dim"] = d.G.rows();
  out["abelian_radical"] = d.abelian_radical;
  out["F"] = matrix_to_json(d.F);
  out["G"] = matrix_to_json(d.G);
  Json delta = Json::array();
  for (const auto& m : d.delta) delta.push_back(matrix_to_json(m));
  out["Delta"] = std::move(delta);
  return out;
}

inline FGDelta fgdelta_from_json(const Json& j) {
  const std::size_t k = detail::as_index(detail::field(j, "s_dim", "fgdelta"), "s_dim");
  const std::size_t d = detail::as_index(detail::field(j, "r_dim", "fgdelta"), "r_dim");
  FGDelta out;
  out.F = matrix_from_json(detail::field(j, "F", "fgdelta"), d, k, "F");
  out.G = matrix_from_json(detail::field(j, "G", "fgdelta"), d, d, "G");
  const Json& delta = detail::field(j, "Delta", "fgdelta");
  if (!delta.is_array() || delta.size() != d) detail::fail("Delta", "expected " + std::to_string(d) + " matrices");
  for (std::size_t p = 0; p < d; ++p) out.delta.push_back(matrix_from_json(delta[p], d, d, "Delta[" + std::to_string(p) + "]"));
  if (j.contains("abelian_radical")) {
    if (!j["abelian_radical"].is_boolean()) detail::fail("abelian_radical", "expected a boolean");
    out.abelian_radical = j["abelian_radical"].get<bool>();
  }
  return out;
}

/// At most `limit` violations are listed; "count" always has the total.
inline Json report_to_json(const Report& report, std::size_t limit = 32) {
  Json out;
  out["ok"] = report.ok();
  out["count"] = report.violations.size();
  std::map<std::string, std::size_t> per;
  for (const auto& v : report.violations) ++per[v.condition];
  Json counts = Json::object();
  for (const auto& [c, k] : per) counts[c] = k;
  out["by_condition"] = std::move(counts);
  Json list = Json::array();
  for (std::size_t t = 0; t < report.violations.size() && t < limit; ++t) {
    const auto& v = report.violations[t];
    list.push_back(Json{{"condition", v.condition}, {"indices", v.indices}, {"residual", vector_to_json(v.residual)}});
  }
  out["violations"] = std::move(list);
  return out;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace lieforge::io
