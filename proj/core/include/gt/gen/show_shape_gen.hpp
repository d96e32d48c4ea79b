// Generated by gtc from type `shape` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "shape_gen.hpp"

namespace gt::gen {

template <class a_>
struct show_shape {
  using abstract_type = shape_t<a_, std::string, gt::unit, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Leaf.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&,
               const std::int64_t& x0,
               const std::string& x1) -> std::string {
              return "Leaf (" + gt::show_int(x0) + ", " + gt::show_string(x1) + ")";
            }),
        slots_::c_Pair.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug& s,
               const std::tuple<a_, gt::Box<shape<a_>>>& x0) -> std::string {
              return "Pair (" + std::string("(") + s.tp.a(inh, std::get<0>(x0)) + ", " + s.f(inh, *std::get<1>(x0)) + ")" + ")";
            }),
        slots_::c_Flag.bind(
            [](const gt::Transformer&,
               const gt::unit&,
               const typename slots_::aug&,
               const bool& x0) -> std::string {
              return "Flag (" + gt::show_bool(x0) + ")";
            }),
        slots_::c_Tagged.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug& s,
               const typename slots_::aug_a& x0,
               const std::tuple<bool, gt::Box<shape<a_>>>& x1,
               const typename slots_::aug& x2) -> std::string {
              return "Tagged (" + x0.fx(inh) + ", " + std::string("(") + gt::show_bool(std::get<0>(x1)) + ", " + s.f(inh, *std::get<1>(x1)) + ")" + ", " + x2.fx(inh) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_shape", methods());
  }
};

}  // namespace gt::gen
