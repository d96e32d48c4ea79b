// Generated by gtc from type `nexpr`. Do not edit.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

#include "arith_gen.hpp"
#include "neg_gen.hpp"
#include "var_gen.hpp"

namespace gt::gen {

template <class a_>
struct nexpr {
  std::variant<Var, Add<a_>, Mul<a_>, Neg<a_>> node;

  nexpr(Var c) : node(std::move(c)) {}
  nexpr(Add<a_> c) : node(std::move(c)) {}
  nexpr(Mul<a_> c) : node(std::move(c)) {}
  nexpr(Neg<a_> c) : node(std::move(c)) {}
  bool operator==(const nexpr&) const = default;
};

// Abstract transformer; parameters (a, ta, inh, syn).
template <class a_, class ta_, class inh_, class syn_>
struct nexpr_t {
  struct tp {
    std::function<ta_(const inh_&, const a_&)> a;
    static constexpr std::array<std::string_view, 1> names{"a"};
  };
  using aug = gt::Aug<inh_, nexpr<a_>, syn_, tp>;
  using aug_a = gt::Aug<inh_, a_, ta_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const std::string&)>
      c_Var{"c_Var"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_a&, const aug_a&)>
      c_Add{"c_Add"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_a&, const aug_a&)>
      c_Mul{"c_Mul"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_a&)>
      c_Neg{"c_Neg"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("nexpr_t", {"c_Var", "c_Add", "c_Mul", "c_Neg"});
  }
};

template <class a_, class ta_, class inh_, class syn_>
syn_ nexpr_gcata(const std::function<ta_(const inh_&, const a_&)>& fa,
                 const gt::Transformer& trans,
                 const inh_& inh,
                 const nexpr<a_>& subj) {
  using slots_ = nexpr_t<a_, ta_, inh_, syn_>;
  const std::function<syn_(const inh_&, const nexpr<a_>&)> self =
      [fa, trans](const inh_& i, const nexpr<a_>& x) {
        return nexpr_gcata<a_, ta_, inh_, syn_>(fa, trans, i, x);
      };
  const typename slots_::tp tpo{fa};
  return std::visit(
      gt::overloaded{
          [&](const Var& c) -> syn_ {
            return trans.call(slots_::c_Var, inh, gt::make_aug(subj, self, tpo),
                              c._0);
          },
          [&](const Add<a_>& c) -> syn_ {
            return trans.call(slots_::c_Add, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fa, tpo),
                              gt::make_aug(c._1, fa, tpo));
          },
          [&](const Mul<a_>& c) -> syn_ {
            return trans.call(slots_::c_Mul, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fa, tpo),
                              gt::make_aug(c._1, fa, tpo));
          },
          [&](const Neg<a_>& c) -> syn_ {
            return trans.call(slots_::c_Neg, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fa, tpo));
          },
      },
      subj.node);
}

}  // namespace gt::gen
