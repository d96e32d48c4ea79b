// Generated by gtc from type `arith` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "arith_gen.hpp"

namespace gt::gen {

template <class a_, class ta_>
struct map_arith {
  using abstract_type = arith_t<a_, ta_, gt::unit, arith<ta_>>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Add.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_a& x1) -> arith<ta_> {
              return Add<ta_>{x0.fx(inh), x1.fx(inh)};
            }),
        slots_::c_Mul.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_a& x1) -> arith<ta_> {
              return Mul<ta_>{x0.fx(inh), x1.fx(inh)};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_arith", methods());
  }
};

}  // namespace gt::gen
