// Negation added to the expression language without touching the existing
// fragments: a new open sum `neg`, its evaluator, and `nexpr` combining it
// with `expr`.
#pragma once

#include <cstdint>

#include "gt/expr.hpp"
#include "gt/gen/nexpr_gen.hpp"

namespace gt::expr {

template <class Inh>
struct neg_eval {
  template <class Abstract>
  static Overrides methods() {
    return {Abstract::c_Neg.bind(
        [](const Transformer&, const Inh& inh, const typename Abstract::aug&,
           const typename Abstract::aug_a& x) {
          return static_cast<std::int64_t>(
              0 - static_cast<std::uint64_t>(x.fx(inh)));
        })};
  }
};

struct NExpr {
  Box<gen::nexpr<NExpr>> node;
  bool operator==(const NExpr&) const = default;
};

NExpr nv(std::string name);
NExpr nadd(NExpr a, NExpr b);
NExpr nmul(NExpr a, NExpr b);
NExpr nneg(NExpr a);

/// var_eval, arith_eval and neg_eval stacked on `nexpr_t`.
Transformer nexpr_eval();
std::int64_t eval(const IntEnv& env, const NExpr& e);
std::string show(const NExpr& e);

/// Embeds an expression without negation.
NExpr lift(const Expr& e);

}  // namespace gt::expr
