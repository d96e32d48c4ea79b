// Generated by gtc from type `tree`. Do not edit.
#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

namespace gt::gen {

template <class a_>
struct forest;

template <class a_>
struct tree {
  struct Node {
    a_ _0;
    gt::Box<forest<a_>> _1;
    bool operator==(const Node&) const = default;
  };
  std::variant<Node> node;

  tree(Node c) : node(std::move(c)) {}
  bool operator==(const tree&) const = default;
};

// Abstract transformer; parameters (a, ta, inh, syn, syn_forest).
template <class a_, class ta_, class inh_, class syn_, class syn_forest_>
struct tree_t {
  struct tp {
    std::function<ta_(const inh_&, const a_&)> a;
    static constexpr std::array<std::string_view, 1> names{"a"};
  };
  using aug = gt::Aug<inh_, tree<a_>, syn_, tp>;
  using aug_a = gt::Aug<inh_, a_, ta_, tp>;
  using aug_forest = gt::Aug<inh_, forest<a_>, syn_forest_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_a&, const aug_forest&)>
      c_Node{"c_Node"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("tree_t", {"c_Node"});
  }
};

template <class a_, class ta_, class inh_, class syn_, class syn_forest_>
syn_ tree_gcata(const std::function<ta_(const inh_&, const a_&)>& fa,
                const std::function<syn_forest_(const inh_&, const forest<a_>&)>& f_forest,
                const gt::Transformer& trans,
                const inh_& inh,
                const tree<a_>& subj) {
  using slots_ = tree_t<a_, ta_, inh_, syn_, syn_forest_>;
  const std::function<syn_(const inh_&, const tree<a_>&)> self =
      [fa, f_forest, trans](const inh_& i, const tree<a_>& x) {
        return tree_gcata<a_, ta_, inh_, syn_, syn_forest_>(fa, f_forest, trans, i, x);
      };
  const typename slots_::tp tpo{fa};
  return std::visit(
      gt::overloaded{
          [&](const typename tree<a_>::Node& c) -> syn_ {
            return trans.call(slots_::c_Node, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(c._0, fa, tpo),
                              gt::make_aug(*c._1, f_forest, tpo));
          },
      },
      subj.node);
}

}  // namespace gt::gen
