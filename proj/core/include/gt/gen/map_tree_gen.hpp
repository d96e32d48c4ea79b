// Generated by gtc from type `tree` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "tree_gen.hpp"

namespace gt::gen {

template <class a_, class ta_>
struct map_tree {
  using abstract_type = tree_t<a_, ta_, gt::unit, tree<ta_>, forest<ta_>>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Node.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_forest& x1) -> tree<ta_> {
              return typename tree<ta_>::Node{x0.fx(inh), x1.fx(inh)};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_tree", methods());
  }
};

}  // namespace gt::gen
