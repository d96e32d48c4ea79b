#include <benchmark/benchmark.h>

#include "gt/codegen.hpp"
#include "gt/expr.hpp"
#include "gt/lambda.hpp"

using namespace gt::lambda;

namespace {

Term numeral(int n) {
  Term body = var("x");
  for (int i = 0; i < n; ++i) body = app(var("f"), body);
  return lam("f", lam("x", body));
}

Term times(int m, int n) {
  const Term mul = lam("m", lam("n", lam("f", app(var("m"), app(var("n"), var("f"))))));
  return app(app(mul, numeral(m)), numeral(n));
}

// Right-leaning application spine of the given length, wrapped in binders.
Term spine(int n) {
  Term t = var("x0");
  for (int i = 1; i < n; ++i) t = app(var("x" + std::to_string(i % 7)), lam("y", t));
  return t;
}

// Hand-written renderer, the baseline for the generated one.
std::string direct_show(const Term& t) {
  return std::visit(gt::overloaded{
                        [](const Term::Var& v) { return "Var (" + v._0 + ")"; },
                        [](const Term::App& a) {
                          return "App (" + direct_show(*a._0) + ", " + direct_show(*a._1) + ")";
                        },
                        [](const Term::Lam& f) { return "Lam (" + f._0 + ", " + direct_show(*f._1) + ")"; },
                    },
                    t.node);
}

void BM_ShowGenerated(benchmark::State& state) {
  const Term t = spine(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(show(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShowGenerated)->Range(16, 1024)->Complexity();

void BM_ShowDirect(benchmark::State& state) {
  const Term t = spine(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(direct_show(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShowDirect)->Range(16, 1024)->Complexity();

void BM_FreeVars(benchmark::State& state) {
  const Term t = spine(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(free_vars(t));
}
BENCHMARK(BM_FreeVars)->Range(16, 1024);

void BM_ReduceChurch(benchmark::State& state) {
  const Strategy s = kStrategies[state.range(0)];
  const Term t = times(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(s, t));
  state.SetLabel(std::string(strategy_name(s)));
}
// Strategies that normalize the product: nor, ao, ha, hn.
BENCHMARK(BM_ReduceChurch)->Arg(1)->Arg(3)->Arg(4)->Arg(6);

void BM_ReduceTraced(benchmark::State& state) {
  const Term t = times(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_with_trace(Strategy::nor, t));
}
BENCHMARK(BM_ReduceTraced);

void BM_EvalExpr(benchmark::State& state) {
  using namespace gt::expr;
  Expr e = v("x");
  for (int i = 0; i < state.range(0); ++i) e = i % 2 ? add(e, v("y")) : mul(v("2"), e);
  const IntEnv env = env_from({{"x", 3}, {"y", 5}});
  for (auto _ : state) benchmark::DoNotOptimize(eval(env, e));
}
BENCHMARK(BM_EvalExpr)->Range(16, 1024);

void BM_GenerateLam(benchmark::State& state) {
  const auto decl = gt::adt::parse_type_decl("type lam = Var of string | App of lam * lam | Lam of string * lam");
  for (auto _ : state) benchmark::DoNotOptimize(gt::codegen::generate_module({decl}, {"show", "foldl", "map"}));
}
BENCHMARK(BM_GenerateLam);

}  // namespace
BENCHMARK_MAIN();
