// Generated by gtc from type `t`. Do not edit.
#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

namespace gt::gen {

template <class a_, class b_>
struct t {
  struct A {
    a_ _0;
    bool operator==(const A&) const = default;
  };
  struct B {
    b_ _0;
    bool operator==(const B&) const = default;
  };
  struct T {
    gt::Box<t<a_, b_>> _0;
    bool operator==(const T&) const = default;
  };
  std::variant<A, B, T> node;

  t(A c) : node(std::move(c)) {}
  t(B c) : node(std::move(c)) {}
  t(T c) : node(std::move(c)) {}
  bool operator==(const t&) const = default;
};

// Abstract transformer; parameters (a, ta, b, tb, inh, syn).
template <class a_, class ta_, class b_, class tb_, class inh_, class syn_>
struct t_t {
  struct tp {
    std::function<ta_(const inh_&, const a_&)> a;
    std::function<tb_(const inh_&, const b_&)> b;
    static constexpr std::array<std::string_view, 2> names{"a", "b"};
  };
  using aug = gt::Aug<inh_, t<a_, b_>, syn_, tp>;
  using aug_a = gt::Aug<inh_, a_, ta_, tp>;
  using aug_b = gt::Aug<inh_, b_, tb_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_a&)>
      c_A{"c_A"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_b&)>
      c_B{"c_B"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug&)>
      c_T{"c_T"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("t_t", {"c_A", "c_B", "c_T"});
  }
};

template <class a_, class ta_, class b_, class tb_, class inh_, class syn_>
syn_ t_gcata(const std::function<ta_(const inh_&, const a_&)>& fa,
             const std::function<tb_(const inh_&, const b_&)>& fb,
             const gt::Transformer& trans,
             const inh_& inh,
             const t<a_, b_>& subj) {
  using slots_ = t_t<a_, ta_, b_, tb_, inh_, syn_>;
  const std::function<syn_(const inh_&, const t<a_, b_>&)> self =
      [fa, fb, trans](const inh_& i, const t<a_, b_>& x) {
        return t_gcata<a_, ta_, b_, tb_, inh_, syn_>(fa, fb, trans, i, x);
      };
  const typename slots_::tp tpo{fa, fb};
  return std::visit(
      gt::overloaded{
          [&](const typename t<a_, b_>::A& c) -> syn_ {
            return trans.call(slots_::c_A, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fa, tpo));
          },
          [&](const typename t<a_, b_>::B& c) -> syn_ {
            return trans.call(slots_::c_B, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fb, tpo));
          },
          [&](const typename t<a_, b_>::T& c) -> syn_ {
            return trans.call(slots_::c_T, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(*c._0, self, tpo));
          },
      },
      subj.node);
}

}  // namespace gt::gen
