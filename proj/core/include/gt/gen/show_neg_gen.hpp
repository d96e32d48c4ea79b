// Generated by gtc from type `neg` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "neg_gen.hpp"

namespace gt::gen {

template <class a_>
struct show_neg {
  using abstract_type = neg_t<a_, std::string, gt::unit, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Neg.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0) -> std::string {
              return "`Neg (" + x0.fx(inh) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_neg", methods());
  }
};

}  // namespace gt::gen
