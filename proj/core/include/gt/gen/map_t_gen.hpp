// Generated by gtc from type `t` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "t_gen.hpp"

namespace gt::gen {

template <class a_, class b_, class ta_, class tb_>
struct map_t {
  using abstract_type = t_t<a_, ta_, b_, tb_, gt::unit, t<ta_, tb_>>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_A.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0) -> t<ta_, tb_> {
              return typename t<ta_, tb_>::A{x0.fx(inh)};
            }),
        slots_::c_B.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_b& x0) -> t<ta_, tb_> {
              return typename t<ta_, tb_>::B{x0.fx(inh)};
            }),
        slots_::c_T.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug& x0) -> t<ta_, tb_> {
              return typename t<ta_, tb_>::T{x0.fx(inh)};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_t", methods());
  }
};

}  // namespace gt::gen
