// Random values for property tests. Every generator takes the engine by
// reference so a fixed seed reproduces a whole test.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "gt/adt.hpp"
#include "gt/expr.hpp"
#include "gt/expr_neg.hpp"
#include "gt/gen/t_gen.hpp"
#include "gt/lambda.hpp"

namespace gen_support {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

/// Lambda terms of depth at most `depth` over a small name pool, so that
/// shadowing and capture happen often.
inline gt::lambda::Term random_term(Rng& rng, int depth) {
  static const std::vector<std::string> names = {"x", "y", "z", "w"};
  using namespace gt::lambda;
  const auto name = [&] { return names[pick(rng, 0, 3)]; };
  if (depth <= 1) return var(name());
  switch (pick(rng, 0, 4)) {
    case 0:
      return var(name());
    case 1:
    case 2:
      return app(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default:
      return lam(name(), random_term(rng, depth - 1));
  }
}

/// Closes a term over its free variables.
inline gt::lambda::Term close_term(const gt::lambda::Term& t) {
  gt::lambda::Term out = t;
  for (const auto& v : gt::lambda::free_vars(t)) out = gt::lambda::lam(v, out);
  return out;
}

using IntT = gt::gen::t<int, int>;

inline IntT random_t(Rng& rng, int depth) {
  const int k = depth <= 1 ? pick(rng, 0, 1) : pick(rng, 0, 2);
  if (k == 0) return IntT::A{pick(rng, -1000, 1000)};
  if (k == 1) return IntT::B{pick(rng, -1000, 1000)};
  return IntT::T{random_t(rng, depth - 1)};
}

/// Expressions over `vars` and small literals.
inline gt::expr::Expr random_expr(Rng& rng, int depth, const std::vector<std::string>& vars) {
  using namespace gt::expr;
  if (depth <= 1 || coin(rng, 0.25)) {
    if (coin(rng)) return v(vars[pick(rng, 0, static_cast<int>(vars.size()) - 1)]);
    return v(std::to_string(pick(rng, 0, 20)));
  }
  Expr a = random_expr(rng, depth - 1, vars);
  Expr b = random_expr(rng, depth - 1, vars);
  return coin(rng) ? add(std::move(a), std::move(b)) : mul(std::move(a), std::move(b));
}

/// Like random_expr, with negation nodes as well.
inline gt::expr::NExpr random_nexpr(Rng& rng, int depth, const std::vector<std::string>& vars) {
  using namespace gt::expr;
  if (depth <= 1 || coin(rng, 0.2)) {
    if (coin(rng)) return nv(vars[pick(rng, 0, static_cast<int>(vars.size()) - 1)]);
    return nv(std::to_string(pick(rng, 0, 20)));
  }
  switch (pick(rng, 0, 2)) {
    case 0:
      return nneg(random_nexpr(rng, depth - 1, vars));
    case 1:
      return nadd(random_nexpr(rng, depth - 1, vars), random_nexpr(rng, depth - 1, vars));
    default:
      return nmul(random_nexpr(rng, depth - 1, vars), random_nexpr(rng, depth - 1, vars));
  }
}

// --- type declarations ------------------------------------------------------

inline gt::adt::ArgShape random_shape(Rng& rng, const gt::adt::TypeDecl& d, int depth) {
  using namespace gt::adt;
  const int choice = pick(rng, 0, depth <= 0 ? 2 : 5);
  switch (choice) {
    case 0:
      if (!d.params.empty()) return param(d.params[pick(rng, 0, static_cast<int>(d.params.size()) - 1)]);
      return external("string");
    case 1: {
      std::vector<ArgShape> args;
      for (const auto& p : d.params) args.push_back(param(p));
      return self_ref(args);
    }
    case 2:
      return external(coin(rng) ? "int" : "bool");
    case 3:
      return external(coin(rng) ? "list" : "option", {random_shape(rng, d, depth - 1)});
    case 4:
      return external("pair", {random_shape(rng, d, depth - 1), random_shape(rng, d, depth - 1)});
    default: {
      std::vector<ArgShape> items;
      const int n = pick(rng, 2, 3);
      for (int i = 0; i < n; ++i) items.push_back(random_shape(rng, d, depth - 1));
      return tuple(items);
    }
  }
}

/// A well-formed declaration named `name`; open sums hold inline tags only.
inline gt::adt::TypeDecl random_decl(Rng& rng, const std::string& name) {
  using namespace gt::adt;
  TypeDecl d;
  d.name = name;
  static const std::vector<std::string> params = {"a", "b", "c"};
  const int np = pick(rng, 0, 3);
  for (int i = 0; i < np; ++i) d.params.push_back(params[i]);
  const bool open = coin(rng, 0.3);
  const int nc = pick(rng, 1, 4);
  std::vector<CtorDecl> ctors;
  for (int i = 0; i < nc; ++i) {
    CtorDecl c;
    c.name = (open ? "`" : "") + std::string(1, static_cast<char>('A' + i)) + "c" + std::to_string(i);
    const int na = pick(rng, 0, 3);
    for (int k = 0; k < na; ++k) c.args.push_back(random_shape(rng, d, 2));
    ctors.push_back(std::move(c));
  }
  if (open) {
    OpenSum s;
    for (auto& c : ctors) s.arms.push_back(SumArm{std::move(c)});
    d.body = std::move(s);
  } else {
    d.body = Variants{std::move(ctors)};
  }
  return d;
}

}  // namespace gen_support
