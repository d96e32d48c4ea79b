// Generated by gtc from type `nexpr` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "nexpr_gen.hpp"

namespace gt::gen {

template <class a_, class ta_>
struct map_nexpr {
  using abstract_type = nexpr_t<a_, ta_, gt::unit, nexpr<ta_>>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Var.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&,
               const std::string& x0) -> nexpr<ta_> {
              return Var{x0};
            }),
        slots_::c_Add.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_a& x1) -> nexpr<ta_> {
              return Add<ta_>{x0.fx(inh), x1.fx(inh)};
            }),
        slots_::c_Mul.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_a& x1) -> nexpr<ta_> {
              return Mul<ta_>{x0.fx(inh), x1.fx(inh)};
            }),
        slots_::c_Neg.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0) -> nexpr<ta_> {
              return Neg<ta_>{x0.fx(inh)};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_nexpr", methods());
  }
};

}  // namespace gt::gen
