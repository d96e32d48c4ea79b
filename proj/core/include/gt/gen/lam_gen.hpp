// Generated by gtc from type `lam`. Do not edit.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "gt/runtime.hpp"

namespace gt::gen {

struct lam {
  struct Var {
    std::string _0;
    bool operator==(const Var&) const = default;
  };
  struct App {
    gt::Box<lam> _0;
    gt::Box<lam> _1;
    bool operator==(const App&) const = default;
  };
  struct Lam {
    std::string _0;
    gt::Box<lam> _1;
    bool operator==(const Lam&) const = default;
  };
  std::variant<Var, App, Lam> node;

  lam(Var c) : node(std::move(c)) {}
  lam(App c) : node(std::move(c)) {}
  lam(Lam c) : node(std::move(c)) {}
  bool operator==(const lam&) const = default;
};

// Abstract transformer; parameters (inh, syn).
template <class inh_, class syn_>
struct lam_t {
  struct tp {
    static constexpr std::array<std::string_view, 0> names{};
  };
  using aug = gt::Aug<inh_, lam, syn_, tp>;

  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const std::string&)>
      c_Var{"c_Var"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const aug&, const aug&)>
      c_App{"c_App"};
  static constexpr gt::Slot<syn_(const gt::Transformer&, const inh_&, const aug&, const std::string&, const aug&)>
      c_Lam{"c_Lam"};

  static gt::Transformer abstract() {
    return gt::Transformer::declare("lam_t", {"c_Var", "c_App", "c_Lam"});
  }
};

template <class inh_, class syn_>
syn_ lam_gcata(const gt::Transformer& trans,
               const inh_& inh,
               const lam& subj) {
  using slots_ = lam_t<inh_, syn_>;
  const std::function<syn_(const inh_&, const lam&)> self =
      [trans](const inh_& i, const lam& x) {
        return lam_gcata<inh_, syn_>(trans, i, x);
      };
  const typename slots_::tp tpo{};
  return std::visit(
      gt::overloaded{
          [&](const lam::Var& c) -> syn_ {
            return trans.call(slots_::c_Var, inh, gt::make_aug(subj, self, tpo),
                              c._0);
          },
          [&](const lam::App& c) -> syn_ {
            return trans.call(slots_::c_App, inh, gt::make_aug(subj, self, tpo),
                              gt::make_aug(*c._0, self, tpo),
                              gt::make_aug(*c._1, self, tpo));
          },
          [&](const lam::Lam& c) -> syn_ {
            return trans.call(slots_::c_Lam, inh, gt::make_aug(subj, self, tpo),
                              c._0,
                              gt::make_aug(*c._1, self, tpo));
          },
      },
      subj.node);
}

}  // namespace gt::gen
