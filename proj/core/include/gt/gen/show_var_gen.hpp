// Generated by gtc from type `var` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "var_gen.hpp"

namespace gt::gen {

struct show_var {
  using abstract_type = var_t<gt::unit, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Var.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const slots_::aug&,
               const std::string& x0) -> std::string {
              return "`Var (" + gt::show_string(x0) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_var", methods());
  }
};

}  // namespace gt::gen
