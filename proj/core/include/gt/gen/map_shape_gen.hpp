// Generated by gtc from type `shape` by plugin `map`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "shape_gen.hpp"

namespace gt::gen {

template <class a_, class ta_>
struct map_shape {
  using abstract_type = shape_t<a_, ta_, gt::unit, shape<ta_>>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Leaf.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&,
               const std::int64_t& x0,
               const std::string& x1) -> shape<ta_> {
              return typename shape<ta_>::Leaf{x0, x1};
            }),
        slots_::c_Pair.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug& s,
               const std::tuple<a_, gt::Box<shape<a_>>>& x0) -> shape<ta_> {
              return typename shape<ta_>::Pair{std::tuple<ta_, gt::Box<shape<ta_>>>{s.tp.a(inh, std::get<0>(x0)), gt::Box<shape<ta_>>(s.f(inh, *std::get<1>(x0)))}};
            }),
        slots_::c_Flag.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&,
               const bool& x0) -> shape<ta_> {
              return typename shape<ta_>::Flag{x0};
            }),
        slots_::c_Tagged.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug& s,
               const typename slots_::aug_a& x0,
               const std::tuple<bool, gt::Box<shape<a_>>>& x1,
               const typename slots_::aug& x2) -> shape<ta_> {
              return typename shape<ta_>::Tagged{x0.fx(inh), std::tuple<bool, gt::Box<shape<ta_>>>{std::get<0>(x1), gt::Box<shape<ta_>>(s.f(inh, *std::get<1>(x1)))}, x2.fx(inh)};
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("map_shape", methods());
  }
};

}  // namespace gt::gen
