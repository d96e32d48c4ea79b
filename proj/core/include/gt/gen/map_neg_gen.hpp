// Generated by gtc from type `neg` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "neg_gen.hpp"

namespace gt::gen {

template <class a_, class ta_>
struct map_neg {
  using abstract_type = neg_t<a_, ta_, gt::unit, neg<ta_>>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Neg.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0) -> neg<ta_> {
              return Neg<ta_>{x0.fx(inh)};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_neg", methods());
  }
};

}  // namespace gt::gen
