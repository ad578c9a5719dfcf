#pragma once

// The lieforge command line. Every command prints a human summary, a "---"
// line, then one JSON document. Exit codes: 0 ok, 1 mathematical violation,
// 2 input or parse error.

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieforge/constructions.hpp"
#include "lieforge/io.hpp"
#include "lieforge/naive_oracle.hpp"

namespace lieforge::cli {

using io::Json;

inline constexpr const char* kVersion = "0.1.0";

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

/// Accumulates one command's output.
struct Run {
  std::string command;
  std::string status = "ok";
  Json inputs = Json::array();
  Json result = Json::object();
  std::vector<std::string> human;

  void say(std::string line) { human.push_back(std::move(line)); }

  void input(const std::string& role, const std::string& name, const std::string& kind, const std::string& digest) {
    inputs.push_back(Json{{"role", role}, {"name", name}, {"kind", kind}, {"sha256", digest}});
  }

  void emit(std::ostream& out) const {
    out << "lieforge " << kVersion << '\n';
    for (const auto& line : human) out << line << '\n';
    out << "---\n";
    Json doc;
    doc["command"] = command;
    doc["status"] = status;
    doc["inputs"] = inputs;
    doc["result"] = result;
    out << doc.dump(2) << '\n';
  }
};

/// An algebra argument resolved from a file or, failing that, a fixture name.
struct LoadedAlgebra {
  LieAlgebra algebra;
  std::optional<std::size_t> s_dim;
  std::optional<Fixture> fixture;
};

inline std::size_t max_dim() {
  const char* env = std::getenv("LIEFORGE_MAX_DIM");
  if (env == nullptr || *env == '\0') return 64;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
    throw Error("LIEFORGE_MAX_DIM must be a positive integer");
  }
  const std::size_t v = std::stoul(s);
  if (v == 0) throw Error("LIEFORGE_MAX_DIM must be a positive integer");
  return v;
}

inline void require_within_cap(std::size_t dim, const std::string& what) {
  const std::size_t cap = max_dim();
  if (dim > cap) {
    throw Error(what + " dimension " + std::to_string(dim) + " exceeds LIEFORGE_MAX_DIM=" + std::to_string(cap));
  }
}

inline Json read_json_file(Run& run, const std::string& role, const std::string& path) {
  const std::string text = io::read_text(path);
  run.input(role, path, "file", sha256_hex(text));
  return io::parse_json(text, path);
}

inline LoadedAlgebra load_algebra(Run& run, const std::string& arg) {
  LoadedAlgebra out;
  if (std::filesystem::is_regular_file(arg)) {
    io::AlgebraFile f = io::algebra_from_json(read_json_file(run, "algebra", arg));
    out.algebra = std::move(f.algebra);
    out.s_dim = f.s_dim;
  } else {
    Fixture fx = fixture(arg);
    run.input("algebra", arg, "fixture", sha256_hex(io::algebra_to_json(fx.algebra, fx.s_dim).dump()));
    out.algebra = fx.algebra;
    out.s_dim = fx.s_dim;
    out.fixture = std::move(fx);
  }
  require_within_cap(out.algebra.dim(), "algebra");
  return out;
}

/// A module file with dim g matrices is over g; with s_dim matrices it is
/// over the Levi factor and is pulled back to g.
inline Representation load_module(Run& run, const std::string& path, const LoadedAlgebra& alg) {
  const Json j = read_json_file(run, "module", path);
  const std::size_t arity = io::representation_arity(j);
  const LieAlgebra& g = alg.algebra;
  if (arity == g.dim()) {
    Representation rep = io::representation_from_json(j, g);
    require_within_cap(rep.module_dim(), "module");
    return rep;
  }
  if (alg.s_dim && arity == *alg.s_dim && *alg.s_dim > 0) {
    const SplitAlgebra sp = split_from_total(g, *alg.s_dim);
    Representation rep = io::representation_from_json(j, sp.s);
    require_within_cap(rep.module_dim(), "module");
    return lift_to_total(sp, rep);
  }
  throw ViolationError("module has " + std::to_string(arity) + " action matrices but the algebra has dimension " +
                           std::to_string(g.dim()),
                       {});
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline int cmd_check(Run& run, const std::string& file) {
  const LoadedAlgebra alg = load_algebra(run, file);
  const LieAlgebra& g = alg.algebra;
  run.say("algebra " + g.name() + ", dim " + std::to_string(g.dim()));
  run.result["name"] = g.name();
  run.result["dim"] = g.dim();

  const Report valid = validate(g);
  run.result["validate"] = io::report_to_json(valid);
  run.say("validate: " + std::string(valid.ok() ? "ok" : "FAILED (" + std::to_string(valid.violations.size()) + " violations)"));
  if (!valid.ok()) {
    const auto& w = valid.violations.front();
    std::string idx;
    for (auto i : w.indices) idx += (idx.empty() ? "" : ",") + g.labels()[i];
    run.say("first witness: " + w.condition + " at (" + idx + ")");
    run.status = "violated";
    return 1;
  }

  const auto series = derived_series(g);
  Json dims = Json::array();
  std::string dims_text;
  for (const auto& s : series) {
    dims.push_back(s.dim());
    dims_text += (dims_text.empty() ? "" : " > ") + std::to_string(s.dim());
  }
  const bool perfect = is_perfect(g);
  const bool solvable = series.back().is_zero();
  const Subspace rad = radical(g);
  const Subspace z = center(g);
  run.result["perfect"] = perfect;
  run.result["solvable"] = solvable;
  run.result["derived_series_dims"] = std::move(dims);
  run.result["killing_form"] = io::matrix_to_json(killing_form(g));
  run.result["radical_dim"] = rad.dim();
  run.result["radical_basis"] = io::matrix_to_json(rad.basis());
  run.result["center_dim"] = z.dim();
  run.say("perfect: " + yes_no(perfect));
  run.say("solvable: " + yes_no(solvable));
  run.say("derived series dims: " + dims_text);
  run.say("radical dim: " + std::to_string(rad.dim()));
  run.say("center dim: " + std::to_string(z.dim()));

  if (alg.s_dim) {
    Json split;
    split["s_dim"] = *alg.s_dim;
    try {
      const SplitAlgebra sp = split_from_total(g, *alg.s_dim);
      std::vector<Vector> rblock;
      for (std::size_t p = 0; p < sp.r_dim(); ++p) rblock.push_back(unit_vector(g.dim(), sp.s_dim() + p));
      const bool matches = Subspace::span(g.dim(), rblock) == rad;
      split["radical_solvable"] = sp.radical_solvable;
      split["radical_abelian"] = sp.radical_abelian();
      split["radical_matches_block"] = matches;
      run.say("split: s_dim " + std::to_string(sp.s_dim()) + ", radical block " +
              (matches ? "is" : "is not") + " the radical");
    } catch (const Error& e) {
      split["error"] = e.what();
      run.result["split"] = std::move(split);
      run.say(std::string("split metadata inconsistent: ") + e.what());
      run.status = "violated";
      return 1;
    }
    run.result["split"] = std::move(split);
  }
  return 0;
}

struct BiderOptions {
  std::string algebra;
  std::string module;
  bool adjoint = false;
  bool symmetric = false;
  bool oracle = false;
  bool basis = false;
};

inline int cmd_bider(Run& run, const BiderOptions& opt) {
  const LoadedAlgebra alg = load_algebra(run, opt.algebra);
  const LieAlgebra& g = alg.algebra;
  const Representation rep = opt.module.empty() ? adjoint(g) : load_module(run, opt.module, alg);
  if (Report hom = check_homomorphism(rep); !hom.ok()) {
    throw ViolationError("module action is not a representation", hom);
  }
  const SpaceReport sr = biderivation_space(g, rep, opt.symmetric);
  run.say("algebra " + g.name() + " (dim " + std::to_string(g.dim()) + "), module " + rep.name() + " (dim " +
          std::to_string(rep.module_dim()) + ")");
  run.say(std::string(opt.symmetric ? "symmetric " : "") + "biderivation space dimension: " + std::to_string(sr.dimension));
  run.result["algebra"] = g.name();
  run.result["module"] = rep.name();
  run.result["module_dim"] = rep.module_dim();
  run.result["symmetric"] = opt.symmetric;
  run.result["dimension"] = sr.dimension;
  run.result["unknowns"] = sr.constraint_cols;
  run.result["constraint_rows"] = sr.constraint_rows;
  int code = 0;
  if (opt.oracle) {
    const Subspace naive = oracle::naive_biderivation_space(g, rep, opt.symmetric);
    const std::size_t ambient = g.dim() * g.dim() * rep.module_dim();
    const bool agree = naive == sr.flattened(ambient);
    run.result["oracle_dimension"] = naive.dim();
    run.result["oracle_agrees"] = agree;
    run.say("naive oracle dimension: " + std::to_string(naive.dim()) + (agree ? " (agrees)" : " (DISAGREES)"));
    if (!agree) {
      run.status = "violated";
      code = 1;
    }
  }
  if (opt.basis) {
    Json b = Json::array();
    for (const auto& phi : sr.basis) b.push_back(io::bilinear_to_json(phi));
    run.result["basis"] = std::move(b);
  }
  return code;
}

inline std::string companion(const std::string& out, const std::string& suffix) {
  std::string stem = out;
  if (stem.size() > 5 && stem.compare(stem.size() - 5, 5, ".json") == 0) stem.resize(stem.size() - 5);
  return stem + suffix;
}

inline int cmd_construct(Run& run, const std::string& name, const std::string& path) {
  const Fixture fx = fixture(name);
  require_within_cap(fx.algebra.dim(), "algebra");
  Json files = Json::array();
  auto write = [&](const std::string& role, const std::string& p, const Json& j) {
    io::write_json(p, j);
    files.push_back(Json{{"role", role}, {"path", p}, {"sha256", sha256_hex(j.dump(2) + "\n")}});
    run.say("wrote " + role + " " + p);
  };
  write("algebra", path, io::algebra_to_json(fx.algebra, fx.s_dim));
  if (fx.module) write("representation", companion(path, ".rep.json"), io::representation_to_json(*fx.module));
  if (fx.product) write("product", companion(path, ".product.json"), io::bilinear_to_json(*fx.product));
  run.result["fixture"] = name;
  run.result["dim"] = fx.algebra.dim();
  if (fx.s_dim) run.result["s_dim"] = *fx.s_dim;
  run.result["files"] = std::move(files);
  return 0;
}

struct FGDeltaOptions {
  std::string algebra;
  std::string file;
  bool compose = false;
  bool decompose = false;
  std::string output;
};

inline std::string support_of(const FGDelta& d) {
  std::string s;
  auto add = [&](bool nonzero, const char* name) {
    if (nonzero) s += (s.empty() ? "" : "+") + std::string(name);
  };
  bool delta = false;
  for (const auto& m : d.delta) delta = delta || !m.is_zero();
  add(!d.F.is_zero(), "F");
  add(!d.G.is_zero(), "G");
  add(delta, "Delta");
  return s.empty() ? "zero" : s;
}

inline int cmd_fgdelta(Run& run, const FGDeltaOptions& opt) {
  if (opt.compose == opt.decompose) throw Error("fgdelta needs exactly one of --compose or --decompose");
  const LoadedAlgebra alg = load_algebra(run, opt.algebra);
  if (!alg.s_dim) throw Error("fgdelta: algebra has no split metadata (\"split\": {\"s_dim\": k})");
  const SplitAlgebra sp = split_from_total(alg.algebra, *alg.s_dim);
  const Json input = read_json_file(run, opt.compose ? "fgdelta" : "product", opt.file);
  run.result["s_dim"] = sp.s_dim();
  run.result["r_dim"] = sp.r_dim();
  run.result["abelian_radical"] = sp.radical_abelian();
  run.say("split algebra " + alg.algebra.name() + ": s_dim " + std::to_string(sp.s_dim()) + ", r_dim " +
          std::to_string(sp.r_dim()) + (sp.radical_abelian() ? ", abelian radical" : ", nonabelian radical"));

  Json written;
  if (opt.decompose) {
    const BilinearMap product = io::bilinear_from_json(input);
    const FGDelta data = decompose(sp, product);
    const Report cond = check_conditions(sp, data);
    const bool round_trip = detail::assemble_product(sp, data) == product;
    run.result["fgdelta"] = io::fgdelta_to_json(data);
    run.result["support"] = support_of(data);
    run.result["conditions"] = io::report_to_json(cond);
    run.result["round_trip"] = round_trip;
    run.say("support: " + support_of(data));
    run.say("conditions: " + std::string(cond.ok() ? "all pass" : "FAILED"));
    run.say("round trip: " + std::string(round_trip ? "exact" : "MISMATCH"));
    written = io::fgdelta_to_json(data);
    if (!cond.ok() || !round_trip) run.status = "violated";
  } else {
    FGDelta data = io::fgdelta_from_json(input);
    data.abelian_radical = sp.radical_abelian();
    if (data.F.rows() != sp.r_dim() || data.F.cols() != sp.s_dim()) {
      throw Error("fgdelta file shape (s_dim " + std::to_string(data.F.cols()) + ", r_dim " +
                  std::to_string(data.F.rows()) + ") does not match the split");
    }
    const Report cond = check_conditions(sp, data);
    run.result["conditions"] = io::report_to_json(cond);
    if (!cond.ok()) {
      const auto& w = cond.violations.front();
      run.say("condition " + w.condition + " fails (" + std::to_string(cond.violations.size()) + " instances)");
      run.status = "violated";
      return 1;
    }
    const BilinearMap product = detail::assemble_product(sp, data);
    const Report bider = check_biderivation(sp.total, adjoint(sp.total), product, true);
    run.result["product"] = io::bilinear_to_json(product);
    run.result["biderivation_check"] = io::report_to_json(bider);
    run.say("conditions: all pass");
    run.say("composed product is " + std::string(bider.ok() ? "" : "NOT ") + "a symmetric biderivation");
    written = io::bilinear_to_json(product);
    if (!bider.ok()) run.status = "violated";
  }
  if (!opt.output.empty()) {
    io::write_json(opt.output, written);
    run.result["output"] = opt.output;
    run.say("wrote " + opt.output);
  }
  return run.status == "ok" ? 0 : 1;
}

struct VerifyOptions {
  std::string algebra;
  std::string product;
  std::string module;
  bool symmetric = false;
  bool cpa = false;
};

inline int cmd_verify(Run& run, const VerifyOptions& opt) {
  const LoadedAlgebra alg = load_algebra(run, opt.algebra);
  const LieAlgebra& g = alg.algebra;
  if (opt.cpa && !opt.module.empty()) throw Error("--cpa applies to products g x g -> g; drop --module");
  const Representation rep = opt.module.empty() ? adjoint(g) : load_module(run, opt.module, alg);
  const BilinearMap phi = io::bilinear_from_json(read_json_file(run, "product", opt.product));
  const Report report = opt.cpa ? check_cpa(g, phi) : check_biderivation(g, rep, phi, opt.symmetric);
  const std::string what = opt.cpa ? "CPA structure" : std::string(opt.symmetric ? "symmetric " : "") + "biderivation";
  run.result["check"] = opt.cpa ? "cpa" : "biderivation";
  run.result["symmetric"] = opt.cpa || opt.symmetric;
  run.result["report"] = io::report_to_json(report);
  if (report.ok()) {
    run.say("product is a " + what);
    return 0;
  }
  const auto& w = report.violations.front();
  std::string idx;
  for (auto i : w.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
  run.say("product is NOT a " + what + ": " + std::to_string(report.violations.size()) + " violations, first " +
          w.condition + " at (" + idx + ")");
  run.status = "violated";
  return 1;
}

/// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact derivation, cocycle and biderivation spaces of Lie algebras over Q", "lieforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string check_file;
  auto* check = app.add_subcommand("check", "validate an algebra and report its structure");
  check->add_option("algebra", check_file, "algebra file or fixture name")->required();

  BiderOptions bo;
  auto* bider = app.add_subcommand("bider", "dimension of the (symmetric) biderivation space");
  bider->add_option("algebra", bo.algebra, "algebra file or fixture name")->required();
  auto* mod = bider->add_option("--module", bo.module, "representation file");
  bider->add_flag("--adjoint", bo.adjoint, "use the adjoint module (default)")->excludes(mod);
  bider->add_flag("--symmetric", bo.symmetric, "restrict to symmetric maps");
  bider->add_flag("--oracle", bo.oracle, "cross-check against the naive assembler");
  bider->add_flag("--basis", bo.basis, "include a basis in the JSON output");

  std::string cname, cpath;
  auto* construct = app.add_subcommand("construct", "write a named fixture to disk");
  construct->add_option("name", cname, "fixture name")->required();
  construct->add_option("output", cpath, "algebra output path")->required();

  FGDeltaOptions fo;
  auto* fg = app.add_subcommand("fgdelta", "split a product into (F, G, Delta) or assemble one");
  fg->add_option("algebra", fo.algebra, "algebra file with split metadata, or fixture name")->required();
  fg->add_option("file", fo.file, "product file (--decompose) or FGDelta file (--compose)")->required();
  auto* fc = fg->add_flag("--compose", fo.compose);
  auto* fd = fg->add_flag("--decompose", fo.decompose);
  fc->excludes(fd);
  fg->add_option("--output", fo.output, "write the result file here");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check a product file against the biderivation or CPA identities");
  verify->add_option("algebra", vo.algebra, "algebra file or fixture name")->required();
  verify->add_option("product", vo.product, "bilinear map file")->required();
  verify->add_option("--module", vo.module, "representation file (default adjoint)");
  verify->add_flag("--symmetric", vo.symmetric);
  verify->add_flag("--cpa", vo.cpa);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Run r;
  r.command = app.get_subcommands().front()->get_name();
  int code = 2;
  try {
    if (*check) code = cmd_check(r, check_file);
    else if (*bider) code = cmd_bider(r, bo);
    else if (*construct) code = cmd_construct(r, cname, cpath);
    else if (*fg) code = cmd_fgdelta(r, fo);
    else if (*verify) code = cmd_verify(r, vo);
  } catch (const ViolationError& e) {
    r.status = "violated";
    r.result["error"] = e.what();
    r.result["report"] = io::report_to_json(e.report());
    r.say(std::string("violation: ") + e.what());
    err << "lieforge: " << e.what() << '\n';
    code = 1;
  } catch (const std::exception& e) {
    r.status = "error";
    r.result = Json{{"error", e.what()}};
    r.say(std::string("error: ") + e.what());
    err << "lieforge: " << e.what() << '\n';
    code = 2;
  }
  r.emit(out);
  return code;
}

}  // namespace lieforge::cli
