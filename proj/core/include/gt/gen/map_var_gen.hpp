// Generated by gtc from type `var` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "var_gen.hpp"

namespace gt::gen {

struct map_var {
  using abstract_type = var_t<gt::unit, var>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Var.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const slots_::aug&,
               const std::string& x0) -> var {
              return Var{x0};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_var", methods());
  }
};

}  // namespace gt::gen
