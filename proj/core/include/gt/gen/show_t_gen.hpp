// Generated by gtc from type `t` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "t_gen.hpp"

namespace gt::gen {

template <class a_, class b_>
struct show_t {
  using abstract_type = t_t<a_, std::string, b_, std::string, gt::unit, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_A.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0) -> std::string {
              return "A (" + x0.fx(inh) + ")";
            }),
        slots_::c_B.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_b& x0) -> std::string {
              return "B (" + x0.fx(inh) + ")";
            }),
        slots_::c_T.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug& x0) -> std::string {
              return "T (" + x0.fx(inh) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_t", methods());
  }
};

}  // namespace gt::gen
