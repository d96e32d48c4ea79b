// Generated by gtc from type `neg`. Do not edit.
#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

namespace gt::gen {

template <class a_>
struct neg;

template <class a_>
struct Neg {
  a_ _0;
  bool operator==(const Neg&) const = default;
};

template <class a_>
struct neg {
  std::variant<Neg<a_>> node;

  neg(Neg<a_> c) : node(std::move(c)) {}
  bool operator==(const neg&) const = default;
};

// Abstract transformer; parameters (a, ta, inh, syn).
template <class a_, class ta_, class inh_, class syn_>
struct neg_t {
  struct tp {
    std::function<ta_(const inh_&, const a_&)> a;
    static constexpr std::array<std::string_view, 1> names{"a"};
  };
  using aug = gt::Aug<inh_, neg<a_>, syn_, tp>;
  using aug_a = gt::Aug<inh_, a_, ta_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_a&)>
      c_Neg{"c_Neg"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("neg_t", {"c_Neg"});
  }
};

template <class a_, class ta_, class inh_, class syn_>
syn_ neg_gcata(const std::function<ta_(const inh_&, const a_&)>& fa,
               const gt::Transformer& trans,
               const inh_& inh,
               const neg<a_>& subj) {
  using slots_ = neg_t<a_, ta_, inh_, syn_>;
  const std::function<syn_(const inh_&, const neg<a_>&)> self =
      [fa, trans](const inh_& i, const neg<a_>& x) {
        return neg_gcata<a_, ta_, inh_, syn_>(fa, trans, i, x);
      };
  const typename slots_::tp tpo{fa};
  return std::visit(
      gt::overloaded{
          [&](const Neg<a_>& c) -> syn_ {
            return trans.call(slots_::c_Neg, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fa, tpo));
          },
      },
      subj.node);
}

}  // namespace gt::gen
