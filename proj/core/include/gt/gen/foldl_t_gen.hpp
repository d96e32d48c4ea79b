// Generated by gtc from type `t` by plugin `foldl`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "t_gen.hpp"

namespace gt::gen {

template <class a_, class b_, class acc_>
struct foldl_t {
  using abstract_type = t_t<a_, acc_, b_, acc_, acc_, acc_>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_A.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0) -> acc_ {
              return x0.fx(inh);
            }),
        slots_::c_B.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const typename slots_::aug_b& x0) -> acc_ {
              return x0.fx(inh);
            }),
        slots_::c_T.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const typename slots_::aug& x0) -> acc_ {
              return x0.fx(inh);
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("foldl_t", methods());
  }
};

}  // namespace gt::gen
