// Generated by gtc from type `forest` by plugin `foldl`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "forest_gen.hpp"

namespace gt::gen {

template <class a_, class acc_>
struct foldl_forest {
  using abstract_type = forest_t<a_, acc_, acc_, acc_, acc_>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Nil.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&) -> acc_ {
              return inh;
            }),
        slots_::c_Cons.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const typename slots_::aug_tree& x0,
               const typename slots_::aug& x1) -> acc_ {
              return x1.fx(x0.fx(inh));
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("foldl_forest", methods());
  }
};

}  // namespace gt::gen
