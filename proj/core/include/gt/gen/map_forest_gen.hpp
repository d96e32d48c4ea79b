// Generated by gtc from type `forest` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "forest_gen.hpp"

namespace gt::gen {

template <class a_, class ta_>
struct map_forest {
  using abstract_type = forest_t<a_, ta_, gt::unit, forest<ta_>, tree<ta_>>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Nil.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&) -> forest<ta_> {
              return typename forest<ta_>::Nil{};
            }),
        slots_::c_Cons.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_tree& x0,
               const typename slots_::aug& x1) -> forest<ta_> {
              return typename forest<ta_>::Cons{x0.fx(inh), x1.fx(inh)};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_forest", methods());
  }
};

}  // namespace gt::gen
