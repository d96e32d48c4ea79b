// Generated by gtc from type `expr` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "expr_gen.hpp"

namespace gt::gen {

template <class a_>
struct show_expr {
  using abstract_type = expr_t<a_, std::string, gt::unit, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Var.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&,
               const std::string& x0) -> std::string {
              return "`Var (" + gt::show_string(x0) + ")";
            }),
        slots_::c_Add.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_a& x1) -> std::string {
              return "`Add (" + x0.fx(inh) + ", " + x1.fx(inh) + ")";
            }),
        slots_::c_Mul.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_a& x1) -> std::string {
              return "`Mul (" + x0.fx(inh) + ", " + x1.fx(inh) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_expr", methods());
  }
};

}  // namespace gt::gen
