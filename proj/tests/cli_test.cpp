#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gt/expr.hpp"
#include "gt/lambda.hpp"
#include "support/generators.hpp"
#include "support/goldens.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gtc_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs gtc with `args` (no shell involved); `env` entries are NAME=VALUE.
  Result run(const std::vector<std::string>& args, const std::vector<std::string>& env = {}) const {
    const fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    const pid_t pid = ::fork();
    if (pid == 0) {
      if (!std::freopen(out.c_str(), "w", stdout) || !std::freopen(err.c_str(), "w", stderr)) std::_Exit(127);
      for (const auto& e : env) ::putenv(const_cast<char*>(e.c_str()));
      std::vector<char*> argv;
      argv.push_back(const_cast<char*>(GTC_PATH));
      for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
      argv.push_back(nullptr);
      ::execv(GTC_PATH, argv.data());
      std::_Exit(127);
    }
    int status = 0;
    ::waitpid(pid, &status, 0);
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = goldens::read(out);
    r.err = goldens::read(err);
    return r;
  }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenWritesFilesAndManifest) {
  const fs::path outdir = dir_ / "gen";
  const Result r = run({"gen", std::string(GT_DECL_DIR) + "/lam.gt", "--with", "show,foldl", "-o", outdir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto want = goldens::generate({{"lam.gt"}, {}, {"show", "foldl"}});
  ASSERT_EQ(want.size(), 3u);
  for (const auto& [name, text] : want) EXPECT_EQ(goldens::read(outdir / name), text) << name;
  const auto manifest = nlohmann::json::parse(goldens::read(outdir / "manifest.json"));
  ASSERT_EQ(manifest.size(), 1u);
  EXPECT_EQ(manifest[0]["decl"], "lam");
  EXPECT_EQ(manifest[0]["plugins"], nlohmann::json({"show", "foldl"}));
  EXPECT_EQ(manifest[0]["files"].size(), 3u);
  size_t files = 0;
  for (const auto& e : fs::directory_iterator(outdir)) files += e.is_regular_file();
  EXPECT_EQ(files, 4u);
}

TEST_F(Cli, GenWithUse) {
  const fs::path outdir = dir_ / "gen";
  const std::string d = GT_DECL_DIR;
  const Result r = run({"gen", d + "/neg.gt", "--use", d + "/var.gt", "--use", d + "/arith.gt", "--use", d + "/expr.gt",
                        "--with", "show", "--with", "map", "-o", outdir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& [name, text] : goldens::generate({{"neg.gt"}, {"var.gt", "arith.gt", "expr.gt"}, {"show", "map"}}))
    EXPECT_EQ(goldens::read(outdir / name), text) << name;
  EXPECT_FALSE(fs::exists(outdir / "var_gen.hpp"));
}

TEST_F(Cli, GenEmptyInput) {
  const Result r = run({"gen", write("empty.gt", "(* nothing *)\n").string(), "-o", (dir_ / "o").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(goldens::read(dir_ / "o" / "manifest.json")), nlohmann::json::array());
}

TEST_F(Cli, GenReportsPositions) {
  const fs::path bad = write("bad.gt", "type t =\n  | A of\n");
  const Result r = run({"gen", bad.string(), "-o", (dir_ / "o").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(bad.string() + ":3:1"), std::string::npos) << r.err;
}

TEST_F(Cli, GenErrors) {
  EXPECT_EQ(run({"gen", (dir_ / "missing.gt").string()}).code, 2);
  const fs::path ok = write("ok.gt", "type u = U\n");
  const Result unknown = run({"gen", ok.string(), "--with", "xml", "-o", (dir_ / "o").string()});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("xml"), std::string::npos);
  const Result invalid = run({"gen", write("v.gt", "type 'a t = A of 'b\n").string(), "-o", (dir_ / "o").string()});
  EXPECT_EQ(invalid.code, 1);
  write("blocker", "");
  EXPECT_EQ(run({"gen", ok.string(), "-o", (dir_ / "blocker" / "x").string()}).code, 2);
}

TEST_F(Cli, Reduce) {
  Result r = run({"reduce", "(\\x. x) y", "--strategy", "bv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Var (y)\n");
  EXPECT_EQ(run({"reduce", "x", "--strategy", "nor"}).out, "Var (x)\n");
  EXPECT_EQ(run({"reduce", "(\\x. \\y. y x) z"}).out, "Lam (y, App (Var (y), Var (z)))\n");
}

TEST_F(Cli, ReduceTrace) {
  const Result r = run({"reduce", "(\\x. (\\y. y) z) w", "-s", "nor", "--trace"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "App (Lam (y, Var (y)), Var (z))\nVar (z)\nVar (z)\n");
}

TEST_F(Cli, ReduceOutOfFuel) {
  const std::string omega = "(\\x. x x) (\\x. x x)";
  Result r = run({"reduce", omega, "--strategy", "nor", "--fuel", "10"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("out of fuel"), std::string::npos);
  r = run({"reduce", omega, "--trace", "--fuel", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(run({"reduce", omega}, {"GT_FUEL=5"}).code, 3);
  EXPECT_EQ(run({"reduce", "(\\x. x) y"}, {"GT_FUEL=0"}).code, 3);
  EXPECT_EQ(run({"reduce", "(\\x. x) y"}, {"GT_FUEL=1"}).code, 0);
  EXPECT_EQ(run({"reduce", "(\\x. x) y"}, {"GT_FUEL=lots"}).code, 1);
}

TEST_F(Cli, ReduceUserErrors) {
  Result r = run({"reduce", "x", "--strategy", "fast"});
  EXPECT_EQ(r.code, 1);
  for (const char* s : {"bn", "nor", "bv", "ao", "ha", "he", "hn"}) EXPECT_NE(r.err.find(s), std::string::npos) << s;
  EXPECT_EQ(run({"reduce", "(\\x"}).code, 1);
  EXPECT_EQ(run({"reduce", "x", "--bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST_F(Cli, ShowAndEval) {
  EXPECT_EQ(run({"show", "\\x. x"}).out, "Lam (x, Var (x))\n");
  const Result r = run({"eval", "x + y*y", "-b", "x=2", "-b", "y=3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11\n");
  const Result unbound = run({"eval", "z"});
  EXPECT_EQ(unbound.code, 1);
  EXPECT_NE(unbound.err.find("unbound variable z"), std::string::npos);
  EXPECT_EQ(run({"eval", "x", "-b", "x=two"}).code, 1);
  EXPECT_EQ(run({"eval", "x +"}).code, 1);
}

TEST_F(Cli, MatchesLibrary) {
  using namespace gt::lambda;
  gen_support::Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    const Term t = gen_support::random_term(rng, 5);
    const Strategy s = kStrategies[gen_support::pick(rng, 0, 6)];
    const Result r = run({"reduce", show(t), "-s", std::string(strategy_name(s)), "--fuel", "200"});
    try {
      const Term want = reduce(s, t, 200);
      EXPECT_EQ(r.code, 0);
      EXPECT_EQ(r.out, show(want) + "\n");
    } catch (const FuelExhausted&) {
      EXPECT_EQ(r.code, 3);
    }
    EXPECT_EQ(run({"show", show(t)}).out, show(t) + "\n");

    const gt::expr::Expr e = gen_support::random_expr(rng, 4, {"p", "q"});
    const std::int64_t p = gen_support::pick(rng, -50, 50), q = gen_support::pick(rng, -50, 50);
    std::function<std::string(const gt::expr::Expr&)> infix = [&](const gt::expr::Expr& x) -> std::string {
      return std::visit(gt::overloaded{
                            [](const gt::gen::Var& v) { return v._0; },
                            [&](const gt::gen::Add<gt::expr::Expr>& a) {
                              return "(" + infix(a._0) + " + " + infix(a._1) + ")";
                            },
                            [&](const gt::gen::Mul<gt::expr::Expr>& m) {
                              return "(" + infix(m._0) + " * " + infix(m._1) + ")";
                            },
                        },
                        x.node->node);
    };
    const Result ev = run({"eval", infix(e), "-b", "p=" + std::to_string(p), "-b", "q=" + std::to_string(q)});
    EXPECT_EQ(ev.out, std::to_string(gt::expr::eval(gt::expr::env_from({{"p", p}, {"q", q}}), e)) + "\n");
  }
}
