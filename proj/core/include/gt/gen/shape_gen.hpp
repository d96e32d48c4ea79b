// Generated by gtc from type `shape`. Do not edit.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

namespace gt::gen {

template <class a_>
struct shape {
  struct Leaf {
    std::int64_t _0;
    std::string _1;
    bool operator==(const Leaf&) const = default;
  };
  struct Pair {
    std::tuple<a_, gt::Box<shape<a_>>> _0;
    bool operator==(const Pair&) const = default;
  };
  struct Flag {
    bool _0;
    bool operator==(const Flag&) const = default;
  };
  struct Tagged {
    a_ _0;
    std::tuple<bool, gt::Box<shape<a_>>> _1;
    gt::Box<shape<a_>> _2;
    bool operator==(const Tagged&) const = default;
  };
  std::variant<Leaf, Pair, Flag, Tagged> node;

  shape(Leaf c) : node(std::move(c)) {}
  shape(Pair c) : node(std::move(c)) {}
  shape(Flag c) : node(std::move(c)) {}
  shape(Tagged c) : node(std::move(c)) {}
  bool operator==(const shape&) const = default;
};

// Abstract transformer; parameters (a, ta, inh, syn).
template <class a_, class ta_, class inh_, class syn_>
struct shape_t {
  struct tp {
    std::function<ta_(const inh_&, const a_&)> a;
    static constexpr std::array<std::string_view, 1> names{"a"};
  };
  using aug = gt::Aug<inh_, shape<a_>, syn_, tp>;
  using aug_a = gt::Aug<inh_, a_, ta_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const std::int64_t&, const std::string&)>
      c_Leaf{"c_Leaf"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const std::tuple<a_, gt::Box<shape<a_>>>&)>
      c_Pair{"c_Pair"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const bool&)>
      c_Flag{"c_Flag"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_a&, const std::tuple<bool, gt::Box<shape<a_>>>&, const aug&)>
      c_Tagged{"c_Tagged"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("shape_t", {"c_Leaf", "c_Pair", "c_Flag", "c_Tagged"});
  }
};

template <class a_, class ta_, class inh_, class syn_>
syn_ shape_gcata(const std::function<ta_(const inh_&, const a_&)>& fa,
                 const gt::Transformer& trans,
                 const inh_& inh,
                 const shape<a_>& subj) {
  using slots_ = shape_t<a_, ta_, inh_, syn_>;
  const std::function<syn_(const inh_&, const shape<a_>&)> self =
      [fa, trans](const inh_& i, const shape<a_>& x) {
        return shape_gcata<a_, ta_, inh_, syn_>(fa, trans, i, x);
      };
  const typename slots_::tp tpo{fa};
  return std::visit(
      gt::overloaded{
          [&](const typename shape<a_>::Leaf& c) -> syn_ {
            return trans.call(slots_::c_Leaf, inh, gt::make_aug(subj, self, tpo),
                              c._0,
                              c._1);
          },
          [&](const typename shape<a_>::Pair& c) -> syn_ {
            return trans.call(slots_::c_Pair, inh, gt::make_aug(subj, self, tpo),
                              c._0);
          },
          [&](const typename shape<a_>::Flag& c) -> syn_ {
            return trans.call(slots_::c_Flag, inh, gt::make_aug(subj, self, tpo),
                              c._0);
          },
          [&](const typename shape<a_>::Tagged& c) -> syn_ {
            return trans.call(slots_::c_Tagged, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fa, tpo),
                              c._1,
                              gt::make_aug(*c._2, self, tpo));
          },
      },
      subj.node);
}

}  // namespace gt::gen
