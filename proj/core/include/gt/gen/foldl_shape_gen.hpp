// Generated by gtc from type `shape` by plugin `foldl`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "shape_gen.hpp"

namespace gt::gen {

template <class a_, class acc_>
struct foldl_shape {
  using abstract_type = shape_t<a_, acc_, acc_, acc_>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Leaf.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const std::int64_t&,
               const std::string&) -> acc_ {
              return inh;
            }),
        slots_::c_Pair.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const std::tuple<a_, gt::Box<shape<a_>>>&) -> acc_ {
              return inh;
            }),
        slots_::c_Flag.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const bool&) -> acc_ {
              return inh;
            }),
        slots_::c_Tagged.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const std::tuple<bool, gt::Box<shape<a_>>>&,
               const typename slots_::aug& x2) -> acc_ {
              return x2.fx(x0.fx(inh));
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("foldl_shape", methods());
  }
};

}  // namespace gt::gen
