// Generated by gtc from type `tree` by plugin `show`. Do not edit.
#pragma once

#include <string>

#include "gt/runtime.hpp"
#include "tree_gen.hpp"

namespace gt::gen {

template <class a_>
struct show_tree {
  using abstract_type = tree_t<a_, std::string, gt::unit, std::string, std::string>;

  static gt::Overrides methods() {
    using slots_ = abstract_type;
    return {
        slots_::c_Node.bind(
            [](const gt::Transformer&,
               const gt::unit& inh,
               const typename slots_::aug&,
               const typename slots_::aug_a& x0,
               const typename slots_::aug_forest& x1) -> std::string {
              return "Node (" + x0.fx(inh) + ", " + x1.fx(inh) + ")";
            }),
    };
  }

  static gt::Transformer make() {
    return abstract_type::abstract().extend("show_tree", methods());
  }
};

}  // namespace gt::gen
