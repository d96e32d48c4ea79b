#include "gt/expr_neg.hpp"

#include "gt/gen/show_nexpr_gen.hpp"

namespace gt::expr {

NExpr nv(std::string name) {
  return NExpr{gen::nexpr<NExpr>{gen::Var{std::move(name)}}};
}
NExpr nadd(NExpr a, NExpr b) {
  return NExpr{gen::nexpr<NExpr>{gen::Add<NExpr>{std::move(a), std::move(b)}}};
}
NExpr nmul(NExpr a, NExpr b) {
  return NExpr{gen::nexpr<NExpr>{gen::Mul<NExpr>{std::move(a), std::move(b)}}};
}
NExpr nneg(NExpr a) {
  return NExpr{gen::nexpr<NExpr>{gen::Neg<NExpr>{std::move(a)}}};
}

using Composed = gen::nexpr_t<NExpr, std::int64_t, IntEnv, std::int64_t>;

Transformer nexpr_eval() {
  return extend_all(
      Composed::abstract(),
      {{"var_eval", var_eval<std::int64_t>::methods<Composed>()},
       {"arith_eval", arith_eval<IntEnv>::methods<Composed>()},
       {"neg_eval", neg_eval<IntEnv>::methods<Composed>()}});
}

std::int64_t eval(const IntEnv& env, const NExpr& e) {
  static const Transformer tr = nexpr_eval();
  static const std::function<std::int64_t(const IntEnv&, const NExpr&)> self =
      [](const IntEnv& s, const NExpr& x) { return eval(s, x); };
  return gen::nexpr_gcata<NExpr, std::int64_t, IntEnv, std::int64_t>(
      self, tr, env, *e.node);
}

std::string show(const NExpr& e) {
  static const Transformer tr = gen::show_nexpr<NExpr>::make();
  static const std::function<std::string(const unit&, const NExpr&)> self =
      [](const unit&, const NExpr& x) { return show(x); };
  return gen::nexpr_gcata<NExpr, std::string, unit, std::string>(self, tr, {},
                                                                 *e.node);
}

NExpr lift(const Expr& e) {
  return std::visit(
      overloaded{
          [](const gen::Var& x) { return nv(x._0); },
          [](const gen::Add<Expr>& x) { return nadd(lift(x._0), lift(x._1)); },
          [](const gen::Mul<Expr>& x) { return nmul(lift(x._0), lift(x._1)); },
      },
      e.node->node);
}

}  // namespace gt::expr
