// Expression problem: variables and arithmetic declared as independent open
// sums with independent evaluators, combined into `expr` by composing their
// handler tables.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gt/gen/expr_gen.hpp"
#include "gt/runtime.hpp"

namespace gt::expr {

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

template <class V>
using Env = std::function<V(const std::string&)>;

/// Evaluator for `Var: asks the environment. Works for any result type V
/// and any abstract transformer that has a c_Var slot over Env<V>.
template <class V>
struct var_eval {
  template <class Abstract>
  static Overrides methods() {
    return {Abstract::c_Var.bind(
        [](const Transformer&, const Env<V>& env, const typename Abstract::aug&,
           const std::string& name) -> V { return env(name); })};
  }
  static Transformer make() {
    using A = gen::var_t<Env<V>, V>;
    return A::abstract().extend("var_eval", methods<A>());
  }
};

/// Evaluator for `Add and `Mul over integers; the environment type is left
/// open.
template <class Inh>
struct arith_eval {
  static std::int64_t plus(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) +
                                     static_cast<std::uint64_t>(b));
  }
  static std::int64_t times(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) *
                                     static_cast<std::uint64_t>(b));
  }

  template <class Abstract>
  static Overrides methods() {
    using aug = typename Abstract::aug;
    using aug_a = typename Abstract::aug_a;
    return {
        Abstract::c_Add.bind([](const Transformer&, const Inh& inh, const aug&,
                                const aug_a& x, const aug_a& y) {
          return plus(x.fx(inh), y.fx(inh));
        }),
        Abstract::c_Mul.bind([](const Transformer&, const Inh& inh, const aug&,
                                const aug_a& x, const aug_a& y) {
          return times(x.fx(inh), y.fx(inh));
        }),
    };
  }
  /// Standalone evaluator for `a arith` given how to evaluate an `a`.
  template <class A>
  static Transformer make() {
    using T = gen::arith_t<A, std::int64_t, Inh, std::int64_t>;
    return T::abstract().extend("arith_eval", methods<T>());
  }
};

/// Closed expressions: `expr` with itself as the parameter.
struct Expr {
  Box<gen::expr<Expr>> node;
  bool operator==(const Expr&) const = default;
};

Expr v(std::string name);
Expr add(Expr a, Expr b);
Expr mul(Expr a, Expr b);

using IntEnv = Env<std::int64_t>;

/// The composed evaluator: var_eval and arith_eval stacked on `expr_t`.
Transformer expr_eval();

/// Throws UnboundVariable when `env` does.
std::int64_t eval(const IntEnv& env, const Expr& e);

/// Environment over `bindings`; names made of decimal digits denote their
/// own value, anything else unbound throws UnboundVariable.
IntEnv env_from(std::map<std::string, std::int64_t, std::less<>> bindings);

std::string show(const Expr& e);

class ExprParseError : public std::runtime_error {
 public:
  ExprParseError(size_t offset, const std::string& message)
      : std::runtime_error("column " + std::to_string(offset + 1) + ": " +
                           message),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Integers, identifiers, `+`, `*` and parentheses; `*` binds tighter.
/// Integer literals become variables named by their digits, which
/// env_from resolves to their value.
Expr parse_expr(std::string_view text);

}  // namespace gt::expr
