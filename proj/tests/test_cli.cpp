#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lieforge/cli.hpp"

using namespace lieforge;
using io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  Json machine() const {
    const auto pos = out.find("\n---\n");
    if (pos == std::string::npos) return Json();
    return Json::parse(out.substr(pos + 5));
  }
  bool says(const std::string& s) const { return out.find(s) != std::string::npos; }
};

Result lf(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(LIEFORGE_TEST_TMP) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    unsetenv("LIEFORGE_MAX_DIM");
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }
  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, CheckFixtures) {
  const Result a = lf({"check", "sl2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(a.says("perfect: true"));
  EXPECT_TRUE(a.says("radical dim: 0"));
  EXPECT_EQ(a.machine()["status"], "ok");
  const Result b = lf({"check", "aff1"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.machine()["result"]["perfect"], false);
  EXPECT_EQ(b.machine()["result"]["radical_dim"], 2);
}

TEST_F(Cli, CheckMalformedFile) {
  write("bad.json", R"({"dim":2,"brackets":[{"i":1,"j":1,"coeffs":[[0,"1"]]}]})");
  const Result r = lf({"check", path("bad.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("brackets[0]"), std::string::npos);
  EXPECT_EQ(r.machine()["status"], "error");
  write("garbage.json", "{\"dim\": 2,");
  EXPECT_EQ(lf({"check", path("garbage.json")}).code, 2);
}

TEST_F(Cli, CheckJacobiViolation) {
  write("jac.json", R"({"dim":3,"brackets":[{"i":0,"j":1,"coeffs":[[2,"1"]]},{"i":1,"j":2,"coeffs":[[0,"1"]]},)"
                    R"({"i":0,"j":2,"coeffs":[[0,"1"]]}]})");
  const Result r = lf({"check", path("jac.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.machine()["status"], "violated");
  EXPECT_TRUE(r.says("jacobi"));
}

TEST_F(Cli, UnknownFixtureAndBadUsage) {
  EXPECT_EQ(lf({"check", "no-such-thing"}).code, 2);
  EXPECT_EQ(lf({"construct", "sl5", path("x.json")}).code, 2);
  EXPECT_EQ(lf({}).code, 2);
  EXPECT_EQ(lf({"bider"}).code, 2);
  EXPECT_EQ(lf({"frobnicate"}).code, 2);
  EXPECT_EQ(lf({"--help"}).code, 0);
}

TEST_F(Cli, BiderDimensions) {
  const Result a = lf({"bider", "sl2-vm:2", "--adjoint", "--symmetric"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.machine()["result"]["dimension"], 0);
  EXPECT_EQ(lf({"bider", "abelian:2", "--adjoint", "--symmetric"}).machine()["result"]["dimension"], 6);
  const Result c = lf({"bider", "aff1", "--adjoint", "--symmetric", "--oracle", "--basis"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.machine()["result"]["dimension"], 3);
  EXPECT_EQ(c.machine()["result"]["oracle_agrees"], true);
  EXPECT_EQ(c.machine()["result"]["basis"].size(), 3u);
}

TEST_F(Cli, ConstructWritesCompanions) {
  const Result r = lf({"construct", "sl2-vm:3", path("v3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::filesystem::exists(path("v3.json")));
  EXPECT_TRUE(std::filesystem::exists(path("v3.rep.json")));
  const Result c = lf({"check", path("v3.json")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.machine()["result"]["dim"], 7);
  // The representation is over sl2 and is pulled back to the 7-dim algebra.
  const Result b = lf({"bider", path("v3.json"), "--module", path("v3.rep.json"), "--symmetric", "--oracle"});
  EXPECT_EQ(b.code, 0) << b.out;
  EXPECT_EQ(b.machine()["result"]["dimension"], 0);

  ASSERT_EQ(lf({"construct", "oscillator", path("osc.json")}).code, 0);
  const Result o = lf({"check", path("osc.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.machine()["result"]["dim"], 6);
  EXPECT_EQ(o.machine()["result"]["perfect"], true);
}

TEST_F(Cli, ModuleArityMismatchIsAViolation) {
  ASSERT_EQ(lf({"construct", "sl2-vm:2", path("v2.json")}).code, 0);
  const Result r = lf({"bider", "aff1", "--module", path("v2.rep.json")});
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, NonperfectDeltaPipeline) {
  ASSERT_EQ(lf({"construct", "nonperfect-delta", path("npd.json")}).code, 0);
  const std::string alg = path("npd.json");
  const std::string prod = path("npd.product.json");
  ASSERT_TRUE(std::filesystem::exists(prod));
  EXPECT_EQ(lf({"verify", alg, prod, "--symmetric"}).code, 0);
  EXPECT_EQ(lf({"verify", alg, prod, "--cpa"}).code, 0);

  const Result d = lf({"fgdelta", alg, prod, "--decompose", "--output", path("npd.fgd.json")});
  ASSERT_EQ(d.code, 0) << d.out;
  EXPECT_EQ(d.machine()["result"]["support"], "Delta");
  EXPECT_EQ(d.machine()["result"]["conditions"]["ok"], true);

  const Result c = lf({"fgdelta", alg, path("npd.fgd.json"), "--compose", "--output", path("again.json")});
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_EQ(io::read_text(path("again.json")), io::read_text(prod));
}

TEST_F(Cli, FgdeltaZeroAndBroken) {
  ASSERT_EQ(lf({"construct", "sl2-vm:2", path("v2.json")}).code, 0);
  write("zero.json", R"({"left_dim":6,"right_dim":6,"module_dim":6,"values":[]})");
  const Result z = lf({"fgdelta", path("v2.json"), path("zero.json"), "--decompose"});
  EXPECT_EQ(z.code, 0);
  EXPECT_EQ(z.machine()["result"]["support"], "zero");

  // G = identity on V(2) violates the G condition.
  write("g.json", R"({"s_dim":3,"r_dim":3,"abelian_radical":true,"F":[["0","0","0"],["0","0","0"],["0","0","0"]],)"
                  R"("G":[["1","0","0"],["0","1","0"],["0","0","1"]],"Delta":[)"
                  R"([["0","0","0"],["0","0","0"],["0","0","0"]],[["0","0","0"],["0","0","0"],["0","0","0"]],)"
                  R"([["0","0","0"],["0","0","0"],["0","0","0"]]]})");
  const Result g = lf({"fgdelta", path("v2.json"), path("g.json"), "--compose"});
  EXPECT_EQ(g.code, 1);
  EXPECT_TRUE(g.says("condition (3)"));

  EXPECT_EQ(lf({"fgdelta", "aff1", path("zero.json"), "--compose", "--decompose"}).code, 2);
  write("nosplit.json", R"({"dim":2,"brackets":[{"i":0,"j":1,"coeffs":[[1,"1"]]}]})");
  EXPECT_EQ(lf({"fgdelta", path("nosplit.json"), path("zero.json"), "--decompose"}).code, 2);
}

TEST_F(Cli, VerifyRejectsBrokenProduct) {
  write("p.json", R"({"left_dim":2,"right_dim":2,"module_dim":2,"values":[{"i":0,"j":1,"coeffs":[[0,"1"]]}]})");
  const Result r = lf({"verify", "aff1", path("p.json"), "--symmetric"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.says("symmetry"));
  write("wrong.json", R"({"left_dim":3,"right_dim":3,"module_dim":3,"values":[]})");
  EXPECT_EQ(lf({"verify", "aff1", path("wrong.json")}).code, 2);
}

TEST_F(Cli, DimensionCap) {
  setenv("LIEFORGE_MAX_DIM", "5", 1);
  const Result r = lf({"bider", "sl2-vm:3", "--symmetric"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("LIEFORGE_MAX_DIM"), std::string::npos);
  EXPECT_EQ(lf({"bider", "aff1", "--symmetric"}).code, 0);
  setenv("LIEFORGE_MAX_DIM", "lots", 1);
  EXPECT_EQ(lf({"check", "aff1"}).code, 2);
  unsetenv("LIEFORGE_MAX_DIM");
}

TEST_F(Cli, OutputIsReproducible) {
  ASSERT_EQ(lf({"construct", "oscillator", path("a.json")}).code, 0);
  const Result x = lf({"check", path("a.json")});
  const Result y = lf({"check", path("a.json")});
  EXPECT_EQ(x.out, y.out);
  EXPECT_EQ(x.machine()["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
