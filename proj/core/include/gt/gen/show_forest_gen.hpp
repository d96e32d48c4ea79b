// Generated by gtc from type `forest` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "forest_gen.hpp"

namespace gt::gen {

template <class a_>
struct show_forest {
  using abstract_type = forest_t<a_, std::string, gt::unit, std::string, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Nil.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&) -> std::string {
              return "Nil";
            }),
        slots_::c_Cons.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_tree& x0,
               const typename slots_::aug& x1) -> std::string {
              return "Cons (" + x0.fx(inh) + ", " + x1.fx(inh) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_forest", methods());
  }
};

}  // namespace gt::gen
