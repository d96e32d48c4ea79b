// Generated by gtc from type `lam` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "lam_gen.hpp"

namespace gt::gen {

struct show_lam {
  using abstract_type = lam_t<gt::unit, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Var.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const slots_::aug&,
               const std::string& x0) -> std::string {
              return "Var (" + gt::show_string(x0) + ")";
            }),
        slots_::c_App.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const slots_::aug&,
               const slots_::aug& x0,
               const slots_::aug& x1) -> std::string {
              return "App (" + x0.fx(inh) + ", " + x1.fx(inh) + ")";
            }),
        slots_::c_Lam.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const slots_::aug&,
               const std::string& x0,
               const slots_::aug& x1) -> std::string {
              return "Lam (" + gt::show_string(x0) + ", " + x1.fx(inh) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_lam", methods());
  }
};

}  // namespace gt::gen
