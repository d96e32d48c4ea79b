// Generated by gtc from type `var`. Do not edit.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

namespace gt::gen {

struct var;

struct Var {
  std::string _0;
  bool operator==(const Var&) const = default;
};

struct var {
  std::variant<Var> node;

  var(Var c) : node(std::move(c)) {}
  bool operator==(const var&) const = default;
};

// Abstract transformer; parameters (inh, syn).
template <class inh_, class syn_>
struct var_t {
  struct tp {
    static constexpr std::array<std::string_view, 0> names{};
  };
  using aug = gt::Aug<inh_, var, syn_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const std::string&)>
      c_Var{"c_Var"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("var_t", {"c_Var"});
  }
};

template <class inh_, class syn_>
syn_ var_gcata(const gt::Transformer& trans,
               const inh_& inh,
               const var& subj) {
  using slots_ = var_t<inh_, syn_>;
  const std::function<syn_(const inh_&, const var&)> self =
      [trans](const inh_& i, const var& x) {
        return var_gcata<inh_, syn_>(trans, i, x);
      };
  const typename slots_::tp tpo{};
  return std::visit(
      gt::overloaded{
          [&](const Var& c) -> syn_ {
            return trans.call(slots_::c_Var, inh, gt::make_aug(subj, self, tpo),
                              c._0);
          },
      },
      subj.node);
}

}  // namespace gt::gen
