// Generated by gtc from type `forest`. Do not edit.
#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

#include "tree_gen.hpp"

namespace gt::gen {

template <class a_>
struct forest {
  struct Nil {
    bool operator==(const Nil&) const = default;
  };
  struct Cons {
    gt::Box<tree<a_>> _0;
    gt::Box<forest<a_>> _1;
    bool operator==(const Cons&) const = default;
  };
  std::variant<Nil, Cons> node;

  forest(Nil c) : node(std::move(c)) {}
  forest(Cons c) : node(std::move(c)) {}
  bool operator==(const forest&) const = default;
};

// Abstract transformer; parameters (a, ta, inh, syn, syn_tree).
template <class a_, class ta_, class inh_, class syn_, class syn_tree_>
struct forest_t {
  struct tp {
    std::function<ta_(const inh_&, const a_&)> a;
    static constexpr std::array<std::string_view, 1> names{"a"};
  };
  using aug = gt::Aug<inh_, forest<a_>, syn_, tp>;
  using aug_a = gt::Aug<inh_, a_, ta_, tp>;
  using aug_tree = gt::Aug<inh_, tree<a_>, syn_tree_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&)>
      c_Nil{"c_Nil"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug_tree&, const aug&)>
      c_Cons{"c_Cons"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("forest_t", {"c_Nil", "c_Cons"});
  }
};

template <class a_, class ta_, class inh_, class syn_, class syn_tree_>
syn_ forest_gcata(const std::function<ta_(const inh_&, const a_&)>& fa,
                  const std::function<syn_tree_(const inh_&, const tree<a_>&)>& f_tree,
                  const gt::Transformer& trans,
                  const inh_& inh,
                  const forest<a_>& subj) {
  using slots_ = forest_t<a_, ta_, inh_, syn_, syn_tree_>;
  const std::function<syn_(const inh_&, const forest<a_>&)> self =
      [fa, f_tree, trans](const inh_& i, const forest<a_>& x) {
        return forest_gcata<a_, ta_, inh_, syn_, syn_tree_>(fa, f_tree, trans, i, x);
      };
  const typename slots_::tp tpo{fa};
  return std::visit(
      gt::overloaded{
          [&](const typename forest<a_>::Nil&) -> syn_ {
            return trans.call(slots_::c_Nil, inh, gt::make_aug(subj, self, tpo));
          },
          [&](const typename forest<a_>::Cons& c) -> syn_ {
            return trans.call(slots_::c_Cons, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(*c._0, f_tree, tpo),
                              gt::make_aug(*c._1, self, tpo));
          },
      },
      subj.node);
}

// Ties the traversals of the recursive group together.
template <class a_, class ta_, class inh_, class syn_tree_, class syn_forest_>
struct tree_forest_knot {
  std::function<ta_(const inh_&, const a_&)> fa;
  gt::Transformer tree_trans;
  gt::Transformer forest_trans;

  syn_tree_ run_tree(const inh_& inh, const tree<a_>& subj) const {
    return tree_gcata<a_, ta_, inh_, syn_tree_, syn_forest_>(fa, forest_fn(), tree_trans, inh, subj);
  }
  std::function<syn_tree_(const inh_&, const tree<a_>&)> tree_fn() const {
    return [knot = *this](const inh_& inh, const tree<a_>& subj) { return knot.run_tree(inh, subj); };
  }

  syn_forest_ run_forest(const inh_& inh, const forest<a_>& subj) const {
    return forest_gcata<a_, ta_, inh_, syn_forest_, syn_tree_>(fa, tree_fn(), forest_trans, inh, subj);
  }
  std::function<syn_forest_(const inh_&, const forest<a_>&)> forest_fn() const {
    return [knot = *this](const inh_& inh, const forest<a_>& subj) { return knot.run_forest(inh, subj); };
  }
};

}  // namespace gt::gen
