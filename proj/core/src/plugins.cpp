#include "gt/plugins.hpp"

#include <variant>

namespace gt::plugins {

using adt::ArgShape;
using codegen::AugRule;
using codegen::CodegenError;
using codegen::CodegenErrorKind;
using codegen::CtorPlan;
using codegen::Plugin;
using codegen::PluginSignature;
using codegen::TypePlan;

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

[[noreturn]] void unsupported(const TypePlan& plan, const std::string& what) {
  throw CodegenError(CodegenErrorKind::UnsupportedShape, plan.decl.name, what);
}

bool is_sibling(const TypePlan& plan, const std::string& name) {
  for (const auto& s : plan.siblings)
    if (s == name) return true;
  return false;
}

/// Whether a shape mentions a type parameter or a recursive occurrence.
bool transformable(const TypePlan& plan, const ArgShape& s) {
  return std::visit(
      [&](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, adt::ParamRef> ||
                      std::is_same_v<V, adt::SelfRef>) {
          return true;
        } else if constexpr (std::is_same_v<V, adt::External>) {
          if (is_sibling(plan, v.name)) return true;
          for (const auto& a : v.args)
            if (transformable(plan, a)) return true;
          return false;
        } else {
          for (const auto& a : v.items)
            if (transformable(plan, a)) return true;
          return false;
        }
      },
      s.v);
}

// --- show ------------------------------------------------------------------

std::string show_raw(const TypePlan& plan, const ArgShape& shape,
                     const std::string& expr) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, adt::ParamRef>) {
          return "s.tp." + v.name + "(inh, " + expr + ")";
        } else if constexpr (std::is_same_v<V, adt::SelfRef>) {
          return "s.f(inh, *" + expr + ")";
        } else if constexpr (std::is_same_v<V, adt::External>) {
          auto it = show_renderers().find(v.name);
          if (it == show_renderers().end() || !v.args.empty())
            unsupported(plan, "show has no renderer for `" +
                                  adt::pretty_print(shape) + "`");
          return it->second + "(" + expr + ")";
        } else {
          std::string out = "std::string(\"(\") + ";
          for (size_t i = 0; i < v.items.size(); ++i) {
            if (i != 0) out += " + \", \" + ";
            out += show_raw(plan, v.items[i],
                            "std::get<" + std::to_string(i) + ">(" + expr +
                                ")");
          }
          return out + " + \")\"";
        }
      },
      shape.v);
}

std::string show_body(const TypePlan& plan, const CtorPlan& c) {
  if (c.args.empty()) return "return " + quoted(c.ctor.name) + ";";
  std::string out = "return " + quoted(c.ctor.name + " (");
  for (size_t i = 0; i < c.args.size(); ++i) {
    const auto& a = c.args[i];
    out += i == 0 ? " + " : " + \", \" + ";
    out += a.rule == AugRule::Raw ? show_raw(plan, a.shape, a.var)
                                  : a.var + ".fx(inh)";
  }
  return out + " + \")\";";
}

// --- map -------------------------------------------------------------------

codegen::Rename mapped(const TypePlan& plan) {
  codegen::Rename r;
  for (const auto& p : plan.decl.params) r[p] = codegen::syn_tparam(p);
  return r;
}

std::string map_raw(const TypePlan& plan, const ArgShape& shape,
                    const std::string& expr) {
  if (!transformable(plan, shape)) return expr;
  const auto rename = mapped(plan);
  return std::visit(
      [&](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, adt::ParamRef>) {
          return "s.tp." + v.name + "(inh, " + expr + ")";
        } else if constexpr (std::is_same_v<V, adt::SelfRef>) {
          return "gt::Box<" + plan.value_type(rename) + ">(s.f(inh, *" + expr +
                 "))";
        } else if constexpr (std::is_same_v<V, adt::External>) {
          unsupported(plan, "map cannot traverse `" +
                                adt::pretty_print(shape) + "`");
        } else {
          std::string out = plan.storage_type(shape, rename) + "{";
          for (size_t i = 0; i < v.items.size(); ++i) {
            if (i != 0) out += ", ";
            out += map_raw(plan, v.items[i],
                           "std::get<" + std::to_string(i) + ">(" + expr + ")");
          }
          return out + "}";
        }
      },
      shape.v);
}

std::string map_body(const TypePlan& plan, const CtorPlan& c) {
  std::string out = "return " + plan.ctor_type(c, mapped(plan)) + "{";
  for (size_t i = 0; i < c.args.size(); ++i) {
    const auto& a = c.args[i];
    if (i != 0) out += ", ";
    out += a.rule == AugRule::Raw ? map_raw(plan, a.shape, a.var)
                                  : a.var + ".fx(inh)";
  }
  return out + "};";
}

}  // namespace

const std::map<std::string, std::string, std::less<>>& show_renderers() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"string", "gt::show_string"},
      {"int", "gt::show_int"},
      {"bool", "gt::show_bool"},
  };
  return table;
}

Plugin show() {
  Plugin p;
  p.name = "show";
  p.inh_syn_signature = [](const TypePlan& plan) {
    PluginSignature sig;
    sig.inh = "gt::unit";
    sig.syn = "std::string";
    sig.param_syn.assign(plan.decl.params.size(), "std::string");
    return sig;
  };
  p.method_body = show_body;
  p.headers = {"<string>"};
  return p;
}

Plugin foldl() {
  Plugin p;
  p.name = "foldl";
  p.inh_syn_signature = [](const TypePlan& plan) {
    PluginSignature sig;
    sig.extra_params = {"acc_"};
    sig.inh = "acc_";
    sig.syn = "acc_";
    sig.param_syn.assign(plan.decl.params.size(), "acc_");
    return sig;
  };
  p.method_body = [](const TypePlan&, const CtorPlan& c) {
    std::string acc = "inh";
    for (const auto& a : c.args)
      if (a.rule != AugRule::Raw) acc = a.var + ".fx(" + acc + ")";
    return "return " + acc + ";";
  };
  return p;
}

Plugin map() {
  Plugin p;
  p.name = "map";
  p.inh_syn_signature = [](const TypePlan& plan) {
    PluginSignature sig;
    for (const auto& param : plan.decl.params) {
      sig.extra_params.push_back(codegen::syn_tparam(param));
      sig.param_syn.push_back(codegen::syn_tparam(param));
    }
    sig.inh = "gt::unit";
    sig.syn = plan.value_type(mapped(plan));
    return sig;
  };
  p.method_body = map_body;
  return p;
}

}  // namespace gt::plugins

namespace gt::codegen {

PluginRegistry PluginRegistry::with_builtins() {
  PluginRegistry r;
  r.add(plugins::show());
  r.add(plugins::foldl());
  r.add(plugins::map());
  return r;
}

}  // namespace gt::codegen
