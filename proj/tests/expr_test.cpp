#include <gtest/gtest.h>

#include <filesystem>

#include "gt/expr.hpp"
#include "gt/expr_neg.hpp"
#include "gt/gen/var_gen.hpp"
#include "support/expr_oracle.hpp"
#include "support/generators.hpp"
#include "support/goldens.hpp"

using namespace gt::expr;
using gt::Transformer;
using gt::unit;

namespace {

// Arithmetic trees with integer leaves, for arith_eval on its own.
// A leaf when `node` is null.
struct Leafy {
  std::int64_t n = 0;
  std::shared_ptr<const gt::gen::arith<Leafy>> node;
};

Leafy leaf(std::int64_t n) { return {n, nullptr}; }
Leafy node(gt::gen::arith<Leafy> a) { return {0, std::make_shared<const gt::gen::arith<Leafy>>(std::move(a))}; }

std::int64_t eval_leafy(const Leafy& l) {
  static const Transformer tr = arith_eval<unit>::make<Leafy>();
  static const std::function<std::int64_t(const unit&, const Leafy&)> fa = [](const unit&, const Leafy& x) {
    return eval_leafy(x);
  };
  if (!l.node) return l.n;
  return gt::gen::arith_gcata<Leafy, std::int64_t, unit, std::int64_t>(fa, tr, {}, *l.node);
}

std::int64_t direct_leafy(const Leafy& l) {
  if (!l.node) return l.n;
  return std::visit(gt::overloaded{
                        [](const gt::gen::Add<Leafy>& a) { return direct_leafy(a._0) + direct_leafy(a._1); },
                        [](const gt::gen::Mul<Leafy>& m) { return direct_leafy(m._0) * direct_leafy(m._1); },
                    },
                    l.node->node);
}

Leafy random_leafy(gen_support::Rng& rng, int depth) {
  if (depth <= 1 || gen_support::coin(rng, 0.2)) return leaf(gen_support::pick(rng, -9, 9));
  Leafy a = random_leafy(rng, depth - 1), b = random_leafy(rng, depth - 1);
  if (gen_support::coin(rng)) return node(gt::gen::Add<Leafy>{a, b});
  return node(gt::gen::Mul<Leafy>{a, b});
}

expr_oracle::Bindings random_bindings(gen_support::Rng& rng) {
  expr_oracle::Bindings b;
  for (const char* n : {"a", "b", "c", "d"}) b[n] = gen_support::pick(rng, -1000, 1000);
  return b;
}

IntEnv env_of(const expr_oracle::Bindings& b) { return env_from({b.begin(), b.end()}); }

}  // namespace

TEST(Eval, Examples) {
  EXPECT_EQ(eval(env_from({{"x", 2}, {"y", 3}}), add(v("x"), mul(v("y"), v("y")))), 11);
  EXPECT_EQ(eval(env_from({{"x", 7}}), v("x")), 7);
  try {
    eval(env_from({}), add(v("z"), v("z")));
    FAIL();
  } catch (const UnboundVariable& e) {
    EXPECT_EQ(e.name(), "z");
    EXPECT_STREQ(e.what(), "unbound variable z");
  }
}

TEST(Eval, NumeralsAreTheirOwnValue) {
  EXPECT_EQ(eval(env_from({}), mul(v("6"), v("7"))), 42);
  EXPECT_EQ(env_from({})("0012"), 12);
  EXPECT_THROW(env_from({})("1a"), UnboundVariable);
}

TEST(Eval, ComposedFromFragmentsOnly) {
  const Transformer tr = expr_eval();
  EXPECT_EQ(tr.provider("c_Var"), "var_eval");
  EXPECT_EQ(tr.provider("c_Add"), "arith_eval");
  EXPECT_EQ(tr.provider("c_Mul"), "arith_eval");
  EXPECT_EQ(tr.chain(), (std::vector<std::string>{"arith_eval", "var_eval", "expr_t"}));
}

TEST(Fragments, VarEvalIsPolymorphic) {
  const Env<std::string> env = [](const std::string& n) { return n == "x" ? std::string("hello") : n; };
  EXPECT_EQ((gt::gen::var_gcata<Env<std::string>, std::string>(var_eval<std::string>::make(), env,
                                                                gt::gen::var{gt::gen::Var{"x"}})),
            "hello");
  const Env<double> half = [](const std::string& n) { return n.size() / 2.0; };
  EXPECT_EQ((gt::gen::var_gcata<Env<double>, double>(var_eval<double>::make(), half, gt::gen::var{gt::gen::Var{"abc"}})),
            1.5);
}

TEST(Fragments, ArithEvalAlone) {
  const Leafy t = node(gt::gen::Add<Leafy>{node(gt::gen::Mul<Leafy>{leaf(2), leaf(5)}), leaf(-3)});
  EXPECT_EQ(eval_leafy(t), 7);
  gen_support::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const Leafy r = random_leafy(rng, 6);
    EXPECT_EQ(eval_leafy(r), direct_leafy(r));
  }
}

TEST(Fragments, ComposedAgreesWithEachFragment) {
  gen_support::Rng rng(32);
  const Transformer var_only = var_eval<std::int64_t>::make();
  const Transformer arith_only = arith_eval<IntEnv>::make<Expr>();
  const std::function<std::int64_t(const IntEnv&, const Expr&)> whole = [](const IntEnv& env, const Expr& e) {
    return eval(env, e);
  };
  for (int i = 0; i < 300; ++i) {
    const auto b = random_bindings(rng);
    const IntEnv env = env_of(b);
    const std::string name = std::string(1, static_cast<char>('a' + gen_support::pick(rng, 0, 3)));
    EXPECT_EQ(eval(env, v(name)), (gt::gen::var_gcata<IntEnv, std::int64_t>(var_only, env, gt::gen::Var{name})));
    const Expr e = gen_support::random_expr(rng, 5, {"a", "b", "c", "d"});
    if (const auto* add = std::get_if<gt::gen::Add<Expr>>(&e.node->node)) {
      EXPECT_EQ(eval(env, e), (gt::gen::arith_gcata<Expr, std::int64_t, IntEnv, std::int64_t>(
                                  whole, arith_only, env, gt::gen::arith<Expr>{*add})));
    }
  }
}

TEST(Eval, MatchesDirectEvaluator) {
  gen_support::Rng rng(33);
  int compared = 0;
  for (int tries = 0; compared < 1000 && tries < 20000; ++tries) {
    const auto b = random_bindings(rng);
    const Expr e = gen_support::random_expr(rng, 8, {"a", "b", "c", "d"});
    const auto want = expr_oracle::eval(b, e);
    if (!want) continue;
    ++compared;
    EXPECT_EQ(eval(env_of(b), e), *want) << show(e);
  }
  EXPECT_EQ(compared, 1000);
}

TEST(Eval, WrapsOnOverflow) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(eval(env_from({{"m", big}}), add(v("m"), v("1"))), std::numeric_limits<std::int64_t>::min());
}

TEST(Neg, Evaluates) {
  EXPECT_EQ(eval(env_from({{"x", 4}}), nadd(nneg(nv("x")), nmul(nv("2"), nv("x")))), 4);
  EXPECT_EQ(show(nneg(nv("x"))), "`Neg (`Var (x))");
  const Transformer tr = nexpr_eval();
  EXPECT_EQ(tr.provider("c_Neg"), "neg_eval");
  EXPECT_EQ(tr.provider("c_Add"), "arith_eval");
  EXPECT_EQ(tr.provider("c_Var"), "var_eval");
  gen_support::Rng rng(34);
  int compared = 0;
  for (int tries = 0; compared < 1000 && tries < 20000; ++tries) {
    const auto b = random_bindings(rng);
    const NExpr e = gen_support::random_nexpr(rng, 8, {"a", "b", "c", "d"});
    const auto want = expr_oracle::eval(b, e);
    if (!want) continue;
    ++compared;
    EXPECT_EQ(eval(env_of(b), e), *want) << show(e);
  }
  EXPECT_EQ(compared, 1000);
}

TEST(Neg, LiftPreservesMeaning) {
  gen_support::Rng rng(35);
  for (int i = 0; i < 300; ++i) {
    const auto b = random_bindings(rng);
    const Expr e = gen_support::random_expr(rng, 6, {"a", "b", "c", "d"});
    EXPECT_EQ(eval(env_of(b), lift(e)), eval(env_of(b), e));
    EXPECT_EQ(show(lift(e)), show(e));
  }
}

TEST(Neg, FragmentSourcesUnchanged) {
  // Generating the fragments alone, and together with the extension, gives
  // the same bytes for var, arith and expr; both match the checked-in files.
  const goldens::Group base{{"var.gt", "arith.gt", "expr.gt"}, {}, {"show", "map"}};
  const goldens::Group extended{{"var.gt", "arith.gt", "expr.gt", "neg.gt"}, {}, {"show", "map"}};
  const auto before = goldens::generate(base);
  const auto after = goldens::generate(extended);
  ASSERT_LT(before.size(), after.size());
  for (size_t i = 0; i < before.size(); ++i) {
    EXPECT_EQ(before[i], after[i]) << before[i].first;
    EXPECT_EQ(goldens::checked_in(before[i].first), before[i].second) << before[i].first;
  }
  // The hand-written fragment evaluators do not know about negation.
  for (const char* f : {"core/include/gt/expr.hpp", "core/src/expr.cpp", "core/gt/var.gt", "core/gt/arith.gt",
                        "core/gt/expr.gt"}) {
    const std::string text = goldens::read(std::filesystem::path(GT_SOURCE_DIR) / f);
    EXPECT_EQ(text.find("Neg"), std::string::npos) << f;
    EXPECT_EQ(text.find("neg"), std::string::npos) << f;
  }
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_expr("x + y*y"), add(v("x"), mul(v("y"), v("y"))));
  EXPECT_EQ(parse_expr("(1 + 2) * 3"), mul(add(v("1"), v("2")), v("3")));
  EXPECT_EQ(parse_expr("a + b + c"), add(add(v("a"), v("b")), v("c")));
  for (const char* bad : {"", "x +", "(x", "x y", "+", "x * * y", "x)"}) EXPECT_THROW(parse_expr(bad), ExprParseError) << bad;
}

TEST(Parse, RoundTripThroughInfix) {
  gen_support::Rng rng(36);
  for (int i = 0; i < 300; ++i) {
    const auto b = random_bindings(rng);
    const Expr e = gen_support::random_expr(rng, 6, {"a", "b", "c", "d"});
    const auto want = expr_oracle::eval(b, e);
    if (!want) continue;
    // Fully parenthesized infix rendering, written here independently.
    std::function<std::string(const Expr&)> infix = [&](const Expr& x) -> std::string {
      return std::visit(gt::overloaded{
                            [](const gt::gen::Var& v) { return v._0; },
                            [&](const gt::gen::Add<Expr>& a) { return "(" + infix(a._0) + " + " + infix(a._1) + ")"; },
                            [&](const gt::gen::Mul<Expr>& m) { return "(" + infix(m._0) + " * " + infix(m._1) + ")"; },
                        },
                        x.node->node);
    };
    EXPECT_EQ(parse_expr(infix(e)), e);
  }
}
