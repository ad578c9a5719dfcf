#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieforge/biderivations.hpp"
#include "lieforge/fgdelta.hpp"
#include "lieforge/split_algebra.hpp"

namespace lieforge {

/// sl(2) in the basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2() {
  return LieAlgebra::from_brackets("sl2", {"h", "e", "f"},
                                   {{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(-2)}, {1, 2, 0, Rational(1)}});
}

/// The 2-dimensional nonabelian algebra [x, y] = y.
inline LieAlgebra aff1() { return LieAlgebra::from_brackets("aff1", {"x", "y"}, {{0, 1, 1, Rational(1)}}); }

/// The (m+1)-dimensional sl(2)-module V(m) on v_0..v_m:
///   h v_i = (m - 2i) v_i,  e v_i = (m - i + 1) v_{i-1},  f v_i = (i + 1) v_{i+1}.
inline Representation vm(std::size_t m) {
  if (m == 0) throw Error("vm: m must be positive; use trivial_rep for the trivial module");
  const std::size_t d = m + 1;
  Matrix h(d, d), e(d, d), f(d, d);
  const long mm = static_cast<long>(m);
  for (std::size_t i = 0; i < d; ++i) {
    const long ii = static_cast<long>(i);
    h(i, i) = mm - 2 * ii;
    if (i >= 1) e(i - 1, i) = mm - ii + 1;
    if (i + 1 < d) f(i + 1, i) = ii + 1;
  }
  return Representation(sl2(), d, {h, e, f}, "V(" + std::to_string(m) + ")");
}

/// Pulls a representation of sp.s back to the total algebra through the
/// quotient g -> g / R: the radical acts by zero.
inline Representation lift_to_total(const SplitAlgebra& sp, const Representation& rep) {
  if (!(rep.algebra() == sp.s)) throw Error("lift_to_total: representation is not over the Levi factor");
  std::vector<Matrix> action = rep.actions();
  for (std::size_t p = 0; p < sp.r_dim(); ++p) action.emplace_back(rep.module_dim(), rep.module_dim());
  return Representation(sp.total, rep.module_dim(), std::move(action), rep.name());
}

/// Direct sum of V(m) over `parts`; a part equal to 0 is a trivial line.
inline Representation sl2_module(const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw Error("sl2_module: no summands");
  std::vector<Representation> reps;
  for (std::size_t m : parts) {
    Representation r = m == 0 ? trivial_rep(sl2(), 1) : vm(m);
    if (m == 0) r.rename("trivial");
    reps.push_back(std::move(r));
  }
  return reps.size() == 1 ? reps.front() : direct_sum(reps);
}

namespace detail {

inline std::vector<std::string> module_labels(const std::vector<std::size_t>& parts) {
  std::size_t nontrivial = 0;
  for (std::size_t m : parts) nontrivial += m > 0 ? 1 : 0;
  std::vector<std::string> out;
  std::size_t block = 0;
  std::size_t z = 0;
  for (std::size_t m : parts) {
    if (m == 0) {
      out.push_back("z" + std::to_string(++z));
      continue;
    }
    const std::string stem = nontrivial == 1 ? "v" : "v" + std::to_string(block) + ".";
    for (std::size_t i = 0; i <= m; ++i) out.push_back(stem + std::to_string(i));
    ++block;
  }
  return out;
}

inline std::string parts_name(const std::vector<std::size_t>& parts) {
  std::string s;
  for (std::size_t m : parts) s += (s.empty() ? "" : ",") + std::to_string(m);
  return s;
}

}  // namespace detail

/// sl(2) ⋉ (sum of V(m_i)) with abelian radical.
inline SplitAlgebra sl2_semidirect(const std::vector<std::size_t>& parts) {
  const Representation phi = sl2_module(parts);
  const auto labels = detail::module_labels(parts);
  LieAlgebra r("abelian:" + std::to_string(labels.size()), labels,
               std::vector<Rational>(labels.size() * labels.size() * labels.size()));
  const std::string name = parts.size() == 1 && parts[0] > 0 ? "sl2-vm:" + std::to_string(parts[0])
                                                              : "sl2-sum:" + detail::parts_name(parts);
  return semidirect(sl2(), phi, r, name);
}

/// sl(2) ⋉ Heisenberg: radical spanned by v0, v1, z with [v0, v1] = z,
/// sl(2) acting as V(1) on the v's and killing z.
inline SplitAlgebra oscillator() {
  LieAlgebra heis = LieAlgebra::from_brackets("heisenberg", {"v0", "v1", "z"}, {{0, 1, 2, Rational(1)}});
  Representation phi = direct_sum({vm(1), trivial_rep(sl2(), 1)});
  return semidirect(sl2(), phi, heis, "oscillator");
}

/// Same s and phi, radical bracket replaced by zero.
inline SplitAlgebra abelianize_radical(const SplitAlgebra& sp) {
  if (sp.radical_abelian()) return sp;
  const std::size_t d = sp.r_dim();
  LieAlgebra a(sp.r.name() + ":abelian", sp.r.labels(), std::vector<Rational>(d * d * d));
  return semidirect(sp.s, sp.phi, a, sp.total.name() + ":abelianized");
}

/// s ⋉ n1 with n1 = phi(s)R and an abelian radical.
inline SplitAlgebra restrict_to_n1(const SplitAlgebra& sp) {
  const Subspace n1 = action_span(sp.phi, Subspace::whole(sp.r_dim()));
  if (n1.is_whole() && sp.radical_abelian()) return sp;
  const Representation phi1 = restrict_rep(sp.phi, n1, sp.phi.name() + ":n1");
  std::vector<std::string> labels;
  for (std::size_t p : n1.pivots()) labels.push_back(sp.r.labels()[p]);
  const std::size_t d = n1.dim();
  LieAlgebra a("abelian:" + std::to_string(d), std::move(labels), std::vector<Rational>(d * d * d));
  return semidirect(sp.s, phi1, a, sp.total.name() + ":n1");
}

/// Result of the module extension p ⋉ V carrying the lifted product.
struct ExtensionResult {
  LieAlgebra algebra;
  BilinearMap product;
  std::size_t v_dim = 0;
  std::size_t generation_depth = 0;
  bool perfect = false;  // recorded, never assumed
  Subspace v;            // V inside the original module
};

/// Given a symmetric biderivation phi: p x p -> M, builds g = p ⋉ V with
/// V = span of M_0 = phi(p, p), M_k = psi(p) M_{k-1}, and the product
/// (x + v)∘(x' + v') = phi(x, x') in V-coordinates.
inline ExtensionResult bz_extension(const LieAlgebra& p, const Representation& rep, const BilinearMap& phi) {
  if (Report pre = check_biderivation(p, rep, phi, true); !pre.ok()) {
    throw ViolationError("bz_extension: input is not a symmetric biderivation", std::move(pre));
  }
  const std::size_t n = p.dim();
  const std::size_t m = rep.module_dim();

  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) gens.push_back(phi.value(i, j));
  Subspace layer = Subspace::span(m, gens);
  Subspace v = layer;
  std::size_t depth = 0;
  while (true) {
    ++depth;
    layer = action_span(rep, layer);
    const Subspace next = v + layer;
    if (next.dim() == v.dim()) break;
    v = next;
  }

  const std::size_t vd = v.dim();
  if (vd == 0) return ExtensionResult{p, BilinearMap(n, n, n), 0, depth, is_perfect(p), v};
  const Representation psi_v = restrict_rep(rep, v, "V");
  LieAlgebra av("V", LieAlgebra::default_labels(vd, "w"), std::vector<Rational>(vd * vd * vd));
  SplitAlgebra sp = semidirect(p, psi_v, av, p.name() + "|xV");

  BilinearMap product(n + vd, n + vd, n + vd);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector c = v.coordinates(phi.value(i, j));
      for (std::size_t q = 0; q < vd; ++q) product(i, j, n + q) = c[q];
    }

  ExtensionResult out{sp.total, std::move(product), vd, depth, false, v};
  out.perfect = is_perfect(out.algebra);
  return out;
}

/// The particular products on an abelian-radical split where only one of
/// F, G, Delta is nonzero.
enum class RecipeKind { F, G, Delta };

struct RecipeSpec {
  RecipeKind kind = RecipeKind::F;
  Matrix map;                // F (r x s) or G (r x r)
  std::vector<Matrix> delta;  // Delta(r_p), column q = Delta(r_p)(r_q)
};

inline const char* recipe_name(RecipeKind k) {
  switch (k) {
    case RecipeKind::F: return "F";
    case RecipeKind::G: return "G";
    case RecipeKind::Delta: return "Delta";
  }
  return "?";
}

struct RecipeResult {
  std::optional<BilinearMap> product;
  Report report;
};

/// Checks the recipe's side condition and assembles its product:
///   F:     phi(a)Fa' = phi(a')Fa                    witness (a, a')
///   G:     phi(a)G phi(a')(r) = phi(a')phi(a)G(r)   witness (a, a', r)
///   Delta: Delta(r)(r') = Delta(r')(r)              witness (r, r')
///          Delta(r)phi(a) = phi(a)Delta(r)          witness (a, r, r')
inline RecipeResult recipe_product(const SplitAlgebra& sp, const RecipeSpec& spec) {
  if (!sp.radical_abelian()) throw Error("recipe_product: radical must be abelian");
  const std::size_t k = sp.s_dim();
  const std::size_t d = sp.r_dim();
  FGDelta data = FGDelta::zero(sp);
  RecipeResult out;
  auto phi = [&](std::size_t a) -> const Matrix& { return sp.phi.action(a); };

  switch (spec.kind) {
    case RecipeKind::F: {
      if (spec.map.rows() != d || spec.map.cols() != k) throw Error("recipe F must be r_dim x s_dim");
      data.F = spec.map;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
          Vector res = phi(a) * data.F.col(b) - phi(b) * data.F.col(a);
          if (!is_zero(res)) out.report.add("phi(a)Fa'=phi(a')Fa", {a, b}, std::move(res));
        }
      break;
    }
    case RecipeKind::G: {
      if (spec.map.rows() != d || spec.map.cols() != d) throw Error("recipe G must be r_dim x r_dim");
      data.G = spec.map;
      for (std::size_t a = 0; a < k; ++a) {
        const Matrix paG = phi(a) * data.G;
        for (std::size_t b = 0; b < k; ++b) {
          const Matrix diff = paG * phi(b) - phi(b) * paG;
          for (std::size_t q = 0; q < d; ++q) {
            Vector res = diff.col(q);
            if (!is_zero(res)) out.report.add("phi(a)Gphi(a')(r)=phi(a')phi(a)G(r)", {a, b, q}, std::move(res));
          }
        }
      }
      break;
    }
    case RecipeKind::Delta: {
      if (spec.delta.size() != d) throw Error("recipe Delta needs one matrix per radical basis vector");
      for (const auto& mtx : spec.delta) {
        if (mtx.rows() != d || mtx.cols() != d) throw Error("recipe Delta blocks must be r_dim x r_dim");
      }
      data.delta = spec.delta;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) {
          Vector res = data.delta_value(p, q) - data.delta_value(q, p);
          if (!is_zero(res)) out.report.add("Delta(r)(r')=Delta(r')(r)", {p, q}, std::move(res));
        }
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t p = 0; p < d; ++p) {
          const Matrix diff = data.delta[p] * phi(a) - phi(a) * data.delta[p];
          for (std::size_t q = 0; q < d; ++q) {
            Vector res = diff.col(q);
            if (!is_zero(res)) out.report.add("Delta(r)phi(a)=phi(a)Delta(r)", {a, p, q}, std::move(res));
          }
        }
      break;
    }
  }
  if (out.report.ok()) out.product = detail::assemble_product(sp, data);
  return out;
}

/// sl(2) ⋉ (V(1) ⊕ trivial^2) with Delta(z1)(z1) = z2, zero elsewhere.
struct DeltaFixture {
  SplitAlgebra split;
  RecipeSpec recipe;
  BilinearMap product;
};

inline DeltaFixture nonperfect_delta() {
  SplitAlgebra sp = sl2_semidirect({1, 0, 0});
  sp.total.rename("nonperfect-delta");
  const std::size_t d = sp.r_dim();  // v0, v1, z1, z2
  RecipeSpec spec{RecipeKind::Delta, Matrix(), std::vector<Matrix>(d, Matrix(d, d))};
  spec.delta[2](3, 2) = 1;
  RecipeResult res = recipe_product(sp, spec);
  if (!res.product) throw ViolationError("nonperfect_delta: recipe side conditions fail", res.report);
  return DeltaFixture{std::move(sp), std::move(spec), std::move(*res.product)};
}

/// A named fixture: the algebra plus whatever companions it carries.
struct Fixture {
  std::string name;
  LieAlgebra algebra;
  std::optional<std::size_t> s_dim;
  std::optional<Representation> module;  // phi of the split, over s
  std::optional<BilinearMap> product;
};

namespace detail {

inline std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 6 || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("fixture: bad " + what + " '" + text + "'");
  }
  return static_cast<std::size_t>(std::stoul(text));
}

inline Fixture from_split(std::string name, const SplitAlgebra& sp) {
  LieAlgebra total = sp.total;
  total.rename(name);
  return Fixture{std::move(name), std::move(total), sp.s_dim(), sp.phi, std::nullopt};
}

}  // namespace detail

/// Names: sl2, aff1, abelian:n, sl2-vm:m, sl2-sum:m1,m2,... (0 = trivial
/// line), oscillator, nonperfect-delta.
inline Fixture fixture(const std::string& name) {
  auto suffix = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (name == "sl2") return Fixture{name, sl2(), 3, std::nullopt, std::nullopt};
  if (name == "aff1") return Fixture{name, aff1(), 0, std::nullopt, std::nullopt};
  if (name == "oscillator") return detail::from_split(name, oscillator());
  if (name == "nonperfect-delta") {
    DeltaFixture f = nonperfect_delta();
    return Fixture{name, f.split.total, f.split.s_dim(), f.split.phi, f.product};
  }
  if (auto rest = suffix("abelian:")) {
    const std::size_t n = detail::parse_count(*rest, "dimension");
    if (n == 0) throw Error("fixture: abelian dimension must be positive");
    return Fixture{name, LieAlgebra::abelian(n), 0, std::nullopt, std::nullopt};
  }
  if (auto rest = suffix("sl2-vm:")) {
    const std::size_t m = detail::parse_count(*rest, "module index");
    if (m == 0) throw Error("fixture: sl2-vm needs m >= 1");
    return detail::from_split(name, sl2_semidirect({m}));
  }
  if (auto rest = suffix("sl2-sum:")) {
    std::vector<std::size_t> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = rest->find(',', start);
      parts.push_back(detail::parse_count(rest->substr(start, comma - start), "summand"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return detail::from_split(name, sl2_semidirect(parts));
  }
  throw Error("unknown fixture '" + name + "'");
}

inline std::vector<std::string> fixture_examples() {
  return {"sl2", "aff1", "abelian:n", "sl2-vm:m", "sl2-sum:m1,m2,...", "oscillator", "nonperfect-delta"};
}

}  // namespace lieforge
