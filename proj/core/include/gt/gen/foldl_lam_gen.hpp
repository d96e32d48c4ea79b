// Generated by gtc from type `lam` by plugin `foldl`. Do not edit.
#pragma once

#include "gt/runtime.hpp"
#include "lam_gen.hpp"

namespace gt::gen {

template <class acc_>
struct foldl_lam {
  using abstract_type = lam_t<acc_, acc_>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Var.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const std::string&) -> acc_ {
              return inh;
            }),
        slots_::c_App.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const typename slots_::aug& x0,
               const typename slots_::aug& x1) -> acc_ {
              return x1.fx(x0.fx(inh));
            }),
        slots_::c_Lam.bind(
            [](const gt::Transformer&,
               const acc_& inh,
               const typename slots_::aug&,
               const std::string&,
               const typename slots_::aug& x1) -> acc_ {
              return x1.fx(inh);
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("foldl_lam", methods());
  }
};

}  // namespace gt::gen
