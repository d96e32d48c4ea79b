// Generated by gtc from type `tree` by plugin `foldl`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "tree_gen.hpp"

namespace gt::gen {

template <class a_, class acc_>
struct foldl_tree {
  using abstract_type = tree_t<a_, acc_, acc_, acc_, acc_>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Node.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_forest& x1) -> acc_ {
              return x1.fx(x0.fx(inh));
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("foldl_tree", methods());
  }
};

}  // namespace gt::gen
