#include "gt/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace gt::codegen {

using adt::ArgShape;
using adt::CtorDecl;
using adt::TypeDecl;

CodegenError::CodegenError(CodegenErrorKind kind, std::string decl,
                           const std::string& message)
    : std::runtime_error(message), kind_(kind), decl_(std::move(decl)) {}

namespace {

std::string summarize(const std::vector<ModuleError::Entry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += "\n";
    out += e.decl + ": " + e.message;
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

const std::set<std::string, std::less<>>& cpp_keywords() {
  static const std::set<std::string, std::less<>> words = {
      "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor",
      "bool", "break", "case", "catch", "char", "char8_t", "char16_t",
      "char32_t", "class", "compl", "concept", "const", "consteval",
      "constexpr", "constinit", "const_cast", "continue", "co_await",
      "co_return", "co_yield", "decltype", "default", "delete", "do",
      "double", "dynamic_cast", "else", "enum", "explicit", "export",
      "extern", "false", "float", "for", "friend", "goto", "if", "inline",
      "int", "long", "mutable", "namespace", "new", "noexcept", "not",
      "not_eq", "nullptr", "operator", "or", "or_eq", "private", "protected",
      "public", "register", "reinterpret_cast", "requires", "return", "short",
      "signed", "sizeof", "static", "static_assert", "static_cast", "struct",
      "switch", "template", "this", "thread_local", "throw", "true", "try",
      "typedef", "typeid", "typename", "union", "unsigned", "using",
      "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq"};
  return words;
}

// Identifiers the emitted code uses locally; a type may not take them.
const std::set<std::string, std::less<>>& reserved_names() {
  static const std::set<std::string, std::less<>> words = {
      "gt", "std", "node", "names", "self", "inh", "s", "x", "c", "i", "subj",
      "trans", "tpo", "slots_", "knot", "abstract_type", "tp", "aug"};
  return words;
}

bool is_keyword(std::string_view s) {
  return cpp_keywords().find(s) != cpp_keywords().end();
}

struct Builtin {
  std::string cpp;
  size_t arity;
  std::string header;
};

const std::map<std::string, Builtin, std::less<>>& builtins() {
  static const std::map<std::string, Builtin, std::less<>> table = {
      {"string", {"std::string", 0, "<string>"}},
      {"int", {"std::int64_t", 0, "<cstdint>"}},
      {"bool", {"bool", 0, ""}},
      {"char", {"char", 0, ""}},
      {"float", {"double", 0, ""}},
      {"unit", {"gt::unit", 0, ""}},
      {"list", {"std::vector", 1, "<vector>"}},
      {"option", {"std::optional", 1, "<optional>"}},
  };
  return table;
}

std::string indent(const std::string& text, size_t n) {
  std::string pad(n, ' ');
  std::string out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!first) out += "\n";
    first = false;
    if (!line.empty()) out += pad + line;
  }
  return out;
}

bool mentions(const std::string& body, const std::string& ident) {
  const std::regex re("(^|[^A-Za-z0-9_])" + ident + "($|[^A-Za-z0-9_])");
  return std::regex_search(body, re);
}

std::string template_header(const std::vector<std::string>& params) {
  if (params.empty()) return "";
  std::vector<std::string> ps;
  for (const auto& p : params) ps.push_back("class " + p);
  return "template <" + join(ps, ", ") + ">\n";
}

}  // namespace

ModuleError::ModuleError(std::vector<Entry> entries)
    : std::runtime_error(summarize(entries)), entries_(std::move(entries)) {}

std::string tparam(const std::string& p) { return p + "_"; }
std::string syn_tparam(const std::string& p) { return "t" + p + "_"; }
std::string sibling_syn(const std::string& t) { return "syn_" + t + "_"; }

std::string main_file_name(const std::string& type) {
  return type + "_gen.hpp";
}
std::string plugin_file_name(const std::string& plugin,
                             const std::string& type) {
  return plugin + "_" + type + "_gen.hpp";
}

// ---------------------------------------------------------------------------
// Type spelling

std::string TypePlan::value_type(const Rename& rename) const {
  if (decl.params.empty()) return decl.name;
  std::vector<std::string> args;
  for (const auto& p : decl.params) {
    auto it = rename.find(p);
    args.push_back(it == rename.end() ? tparam(p) : it->second);
  }
  return decl.name + "<" + join(args, ", ") + ">";
}

const TypeDecl& TypePlan::sibling(const std::string& name) const {
  auto it = table->decls.find(name);
  if (it == table->decls.end())
    throw CodegenError(CodegenErrorKind::InvalidDecl, decl.name,
                       "unknown group member `" + name + "`");
  return it->second;
}

bool TypePlan::boxed(const ArgShape& s) const {
  if (std::holds_alternative<adt::SelfRef>(s.v)) return true;
  if (const auto* e = std::get_if<adt::External>(&s.v))
    return builtins().find(e->name) == builtins().end() &&
           table->externals.find(e->name) == table->externals.end() &&
           table->decls.find(e->name) != table->decls.end();
  return false;
}

std::string TypePlan::storage_type(const ArgShape& s,
                                   const Rename& rename) const {
  return std::visit(
      [&](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, adt::ParamRef>) {
          auto it = rename.find(v.name);
          return it == rename.end() ? tparam(v.name) : it->second;
        } else if constexpr (std::is_same_v<V, adt::SelfRef>) {
          return "gt::Box<" + value_type(rename) + ">";
        } else if constexpr (std::is_same_v<V, adt::External>) {
          std::vector<std::string> args;
          for (const auto& a : v.args) args.push_back(storage_type(a, rename));
          if (auto b = builtins().find(v.name); b != builtins().end()) {
            if (args.size() != b->second.arity)
              throw CodegenError(CodegenErrorKind::UnsupportedShape, decl.name,
                                 "`" + v.name + "` expects " +
                                     std::to_string(b->second.arity) +
                                     " type arguments");
            return args.empty() ? b->second.cpp
                                : b->second.cpp + "<" + join(args, ", ") + ">";
          }
          if (auto e = table->externals.find(v.name);
              e != table->externals.end()) {
            if (!args.empty())
              throw CodegenError(CodegenErrorKind::UnsupportedShape, decl.name,
                                 "registered external `" + v.name +
                                     "` takes no type arguments");
            return e->second;
          }
          if (auto d = table->decls.find(v.name); d != table->decls.end()) {
            if (args.size() != d->second.params.size())
              throw CodegenError(CodegenErrorKind::UnsupportedShape, decl.name,
                                 "`" + v.name + "` expects " +
                                     std::to_string(d->second.params.size()) +
                                     " type arguments");
            std::string t =
                args.empty() ? v.name : v.name + "<" + join(args, ", ") + ">";
            return "gt::Box<" + t + ">";
          }
          throw CodegenError(CodegenErrorKind::UnsupportedShape, decl.name,
                             "no C++ type is known for `" + v.name + "`");
        } else {
          std::vector<std::string> items;
          for (const auto& a : v.items) items.push_back(storage_type(a, rename));
          return "std::tuple<" + join(items, ", ") + ">";
        }
      },
      s.v);
}

std::string TypePlan::ctor_type(const CtorPlan& c, const Rename& rename) const {
  if (!c.ctor.is_tag())
    return (templated() ? "typename " : "") + value_type(rename) +
           "::" + c.cpp_name;
  const auto& origin = *c.ctor.origin;
  if (origin.args.empty()) return c.cpp_name;
  std::vector<std::string> args;
  for (const auto& a : origin.args) args.push_back(storage_type(a, rename));
  return c.cpp_name + "<" + join(args, ", ") + ">";
}

// ---------------------------------------------------------------------------
// Planning

namespace {

void check_type_name(const std::string& decl, const std::string& name) {
  if (is_keyword(name) ||
      reserved_names().find(name) != reserved_names().end() ||
      builtins().find(name) != builtins().end())
    throw CodegenError(CodegenErrorKind::NameCollision, decl,
                       "type name `" + name +
                           "` clashes with an identifier the generated code "
                           "uses");
}

ArgPlan plan_arg(const TypePlan& plan, const ArgShape& shape, size_t index) {
  ArgPlan a;
  a.shape = shape;
  a.var = "x" + std::to_string(index);
  a.storage_type = plan.storage_type(shape);
  if (const auto* p = std::get_if<adt::ParamRef>(&shape.v)) {
    a.rule = AugRule::Param;
    a.target = p->name;
    a.handler_type = "aug_" + p->name;
  } else if (std::holds_alternative<adt::SelfRef>(shape.v)) {
    a.rule = AugRule::Self;
    a.target = plan.decl.name;
    a.handler_type = "aug";
  } else if (const auto* e = std::get_if<adt::External>(&shape.v);
             e != nullptr &&
             std::find(plan.siblings.begin(), plan.siblings.end(), e->name) !=
                 plan.siblings.end()) {
    a.rule = AugRule::Self;
    a.target = e->name;
    a.handler_type = "aug_" + e->name;
  } else {
    a.rule = AugRule::Raw;
    if (plan.boxed(shape)) {
      std::string boxed = a.storage_type;
      a.handler_type = boxed.substr(8, boxed.size() - 9);  // strip gt::Box<>
    } else {
      a.handler_type = a.storage_type;
    }
  }
  return a;
}

}  // namespace

TypePlan plan_type(const TypeDecl& decl, const adt::DeclEnv& env,
                   const GenOptions& options) {
  adt::DeclEnv scope = env;
  scope.insert_or_assign(decl.name, decl);

  TypePlan plan;
  plan.decl = decl.is_open_sum() ? adt::resolve_open_sum(decl, scope) : decl;
  plan.siblings = decl.cluster;

  const auto* variants = std::get_if<adt::Variants>(&plan.decl.body);
  if (variants == nullptr || variants->ctors.empty())
    throw adt::ValidationError(adt::ValidationKind::EmptyVariant, decl.name,
                               "type `" + decl.name + "` has no constructors");

  auto table = std::make_shared<TypeTable>();
  for (const auto& [name, d] : scope) table->decls.emplace(name, d);
  table->externals = options.externals;
  plan.table = table;

  check_type_name(decl.name, decl.name);
  for (const auto& sib : plan.siblings) {
    if (table->decls.find(sib) == table->decls.end())
      throw CodegenError(CodegenErrorKind::InvalidDecl, decl.name,
                         "group member `" + sib + "` is not available");
    if (table->decls.at(sib).params != decl.params)
      throw CodegenError(CodegenErrorKind::InvalidDecl, decl.name,
                         "members of a recursive group must share parameters");
  }

  for (const auto& p : decl.params) {
    plan.abstract_params.push_back(p);
    plan.abstract_params.push_back("t" + p);
  }
  plan.abstract_params.push_back("inh");
  plan.abstract_params.push_back("syn");
  for (const auto& sib : plan.siblings)
    plan.abstract_params.push_back("syn_" + sib);

  // Every emitted template parameter and tp member must be distinct.
  std::set<std::string> seen;
  auto claim = [&](const std::string& ident) {
    if (!seen.insert(ident).second)
      throw CodegenError(CodegenErrorKind::NameCollision, decl.name,
                         "generated identifier `" + ident +
                             "` would be declared twice");
  };
  for (const auto& p : decl.params) {
    if (is_keyword(p) || p == "names")
      throw CodegenError(CodegenErrorKind::NameCollision, decl.name,
                         "type parameter '" + p + " is reserved in C++");
    claim(tparam(p));
    claim(syn_tparam(p));
  }
  claim("inh_");
  claim("syn_");
  for (const auto& sib : plan.siblings) claim(sibling_syn(sib));
  std::set<std::string> aliases;
  for (const auto& p : decl.params) aliases.insert("aug_" + p);
  for (const auto& sib : plan.siblings)
    if (!aliases.insert("aug_" + sib).second)
      throw CodegenError(CodegenErrorKind::NameCollision, decl.name,
                         "`aug_" + sib + "` would be declared twice");

  for (const auto& c : variants->ctors) {
    CtorPlan cp;
    cp.ctor = c;
    cp.cpp_name = c.bare_name();
    cp.slot = "c_" + cp.cpp_name;
    if (is_keyword(cp.cpp_name))
      throw CodegenError(CodegenErrorKind::NameCollision, decl.name,
                         "constructor `" + cp.cpp_name + "` is a C++ keyword");
    if (c.is_tag() && !c.origin)
      throw CodegenError(CodegenErrorKind::InvalidDecl, decl.name,
                         "tag " + c.name + " has no origin");
    for (size_t i = 0; i < c.args.size(); ++i)
      cp.args.push_back(plan_arg(plan, c.args[i], i));
    plan.ctors.push_back(std::move(cp));
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Emission

namespace {

std::vector<std::string> value_tparams(const TypePlan& plan) {
  std::vector<std::string> out;
  for (const auto& p : plan.decl.params) out.push_back(tparam(p));
  return out;
}

std::vector<std::string> abstract_tparams(const TypePlan& plan) {
  std::vector<std::string> out;
  for (const auto& p : plan.abstract_params) out.push_back(p + "_");
  return out;
}

std::string fn_type(const std::string& syn, const std::string& val) {
  return "std::function<" + syn + "(const inh_&, const " + val + "&)>";
}

std::string param_fn(const std::string& p) { return "f" + p; }
std::string sibling_fn(const std::string& s) { return "f_" + s; }

std::string sibling_value_type(const TypePlan& plan, const std::string& sib) {
  const auto& d = plan.sibling(sib);
  if (d.params.empty()) return sib;
  std::vector<std::string> args;
  for (const auto& p : d.params) args.push_back(tparam(p));
  return sib + "<" + join(args, ", ") + ">";
}

std::string emit_ctor_struct(const TypePlan& plan, const CtorPlan& c,
                             bool top_level) {
  std::string out;
  if (top_level) out += template_header(value_tparams(plan));
  out += "struct " + c.cpp_name + " {\n";
  for (size_t i = 0; i < c.args.size(); ++i)
    out += "  " + c.args[i].storage_type + " _" + std::to_string(i) + ";\n";
  out += "  bool operator==(const " + c.cpp_name + "&) const = default;\n";
  out += "};\n";
  return out;
}

std::string emit_node_type(const TypePlan& plan) {
  std::vector<std::string> alts;
  for (const auto& c : plan.ctors)
    alts.push_back(c.ctor.is_tag() ? plan.ctor_type(c) : c.cpp_name);
  std::string out = "  std::variant<" + join(alts, ", ") + "> node;\n\n";
  for (const auto& alt : alts)
    out += "  " + plan.decl.name + "(" + alt +
           " c) : node(std::move(c)) {}\n";
  out += "  bool operator==(const " + plan.decl.name +
         "&) const = default;\n";
  return out;
}

}  // namespace

std::string gen_type(const TypePlan& plan) {
  std::string out;
  const std::string head = template_header(value_tparams(plan));
  if (plan.decl.is_structural()) {
    std::string own;
    for (const auto& c : plan.ctors)
      if (c.ctor.origin->decl == plan.decl.name)
        own += emit_ctor_struct(plan, c, true) + "\n";
    if (!own.empty()) out += head + "struct " + plan.decl.name + ";\n\n" + own;
    out += head + "struct " + plan.decl.name + " {\n";
    out += emit_node_type(plan);
    out += "};\n";
    return out;
  }
  out += head + "struct " + plan.decl.name + " {\n";
  for (const auto& c : plan.ctors)
    out += indent(emit_ctor_struct(plan, c, false), 2) + "\n";
  out += emit_node_type(plan);
  out += "};\n";
  return out;
}

std::string gen_abstract_transformer(const TypePlan& plan) {
  std::string out;
  out += "// Abstract transformer; parameters (" +
         join(plan.abstract_params, ", ") + ").\n";
  out += template_header(abstract_tparams(plan));
  out += "struct " + plan.decl.name + "_t {\n";
  out += "  struct tp {\n";
  for (const auto& p : plan.decl.params)
    out += "    " + fn_type(syn_tparam(p), tparam(p)) + " " + p + ";\n";
  std::vector<std::string> quoted;
  for (const auto& p : plan.decl.params) quoted.push_back("\"" + p + "\"");
  out += "    static constexpr std::array<std::string_view, " +
         std::to_string(plan.decl.params.size()) + "> names{" +
         join(quoted, ", ") + "};\n";
  out += "  };\n";
  out += "  using aug = gt::Aug<inh_, " + plan.value_type() + ", syn_, tp>;\n";
  for (const auto& p : plan.decl.params)
    out += "  using aug_" + p + " = gt::Aug<inh_, " + tparam(p) + ", " +
           syn_tparam(p) + ", tp>;\n";
  for (const auto& sib : plan.siblings)
    out += "  using aug_" + sib + " = gt::Aug<inh_, " +
           sibling_value_type(plan, sib) + ", " + sibling_syn(sib) +
           ", tp>;\n";
  out += "\n";
  std::vector<std::string> slot_names;
  for (const auto& c : plan.ctors) {
    std::vector<std::string> sig = {"const gt::Transformer&", "const inh_&",
                                    "const aug&"};
    for (const auto& a : c.args) sig.push_back("const " + a.handler_type + "&");
    out += "  static constexpr gt::Slot<syn_(" + join(sig, ", ") + ")>\n";
    out += "      " + c.slot + "{\"" + c.slot + "\"};\n";
    slot_names.push_back("\"" + c.slot + "\"");
  }
  out += "\n";
  out += "  static gt::Transformer abstract() {\n";
  out += "    return gt::Transformer::declare(\"" + plan.decl.name + "_t\", {" +
         join(slot_names, ", ") + "});\n";
  out += "  }\n";
  out += "};\n";
  return out;
}

namespace {

std::vector<std::string> gcata_params(const TypePlan& plan,
                                      bool with_types) {
  std::vector<std::string> out;
  for (const auto& p : plan.decl.params)
    out.push_back(with_types ? "const " + fn_type(syn_tparam(p), tparam(p)) +
                                   "& " + param_fn(p)
                             : param_fn(p));
  for (const auto& sib : plan.siblings)
    out.push_back(with_types ? "const " +
                                   fn_type(sibling_syn(sib),
                                           sibling_value_type(plan, sib)) +
                                   "& " + sibling_fn(sib)
                             : sibling_fn(sib));
  return out;
}

std::string aug_expr(const TypePlan& plan, const ArgPlan& a) {
  const std::string field = "c._" + a.var.substr(1);
  switch (a.rule) {
    case AugRule::Param:
      return "gt::make_aug(" + field + ", " + param_fn(a.target) + ", tpo)";
    case AugRule::Self:
      return "gt::make_aug(*" + field + ", " +
             (a.target == plan.decl.name ? std::string("self")
                                         : sibling_fn(a.target)) +
             ", tpo)";
    case AugRule::Raw:
      return plan.boxed(a.shape) ? "*" + field : field;
  }
  return field;
}

}  // namespace

std::string gen_traversal(const TypePlan& plan) {
  const std::string name = plan.decl.name;
  const std::string value = plan.value_type();
  const auto tps = abstract_tparams(plan);
  const std::string inst = name + "_gcata<" + join(tps, ", ") + ">";

  std::vector<std::string> params = gcata_params(plan, true);
  params.push_back("const gt::Transformer& trans");
  params.push_back("const inh_& inh");
  params.push_back("const " + value + "& subj");

  std::vector<std::string> captures = gcata_params(plan, false);
  captures.push_back("trans");
  std::vector<std::string> forwarded = gcata_params(plan, false);
  forwarded.push_back("trans");
  forwarded.push_back("i");
  forwarded.push_back("x");

  std::string out;
  out += template_header(tps);
  out += "syn_ " + name + "_gcata(";
  const std::string cont(name.size() + 12, ' ');
  out += join(params, ",\n" + cont) + ") {\n";
  out += "  using slots_ = " + name + "_t<" + join(tps, ", ") + ">;\n";
  out += "  const " + fn_type("syn_", value) + " self =\n";
  out += "      [" + join(captures, ", ") + "](const inh_& i, const " + value +
         "& x) {\n";
  out += "        return " + inst + "(" + join(forwarded, ", ") + ");\n";
  out += "      };\n";
  std::vector<std::string> tp_init;
  for (const auto& p : plan.decl.params) tp_init.push_back(param_fn(p));
  out += "  const typename slots_::tp tpo{" + join(tp_init, ", ") + "};\n";
  out += "  return std::visit(\n";
  out += "      gt::overloaded{\n";
  for (const auto& c : plan.ctors) {
    out += "          [&](const " + plan.ctor_type(c) +
           (c.args.empty() ? "&" : "& c") + ") -> syn_ {\n";
    out += "            return trans.call(slots_::" + c.slot +
           ", inh, gt::make_aug(subj, self, tpo)";
    for (const auto& a : c.args)
      out += ",\n                              " + aug_expr(plan, a);
    out += ");\n";
    out += "          },\n";
  }
  out += "      },\n";
  out += "      subj.node);\n";
  out += "}\n";
  return out;
}

std::string gen_knot(const std::vector<TypePlan>& group) {
  if (group.size() < 2) return "";
  const TypePlan& first = group.front();
  std::vector<std::string> names;
  for (const auto& p : group) names.push_back(p.decl.name);
  const std::string knot = join(names, "_") + "_knot";

  std::vector<std::string> tps;
  for (const auto& p : first.decl.params) {
    tps.push_back(tparam(p));
    tps.push_back(syn_tparam(p));
  }
  tps.push_back("inh_");
  for (const auto& n : names) tps.push_back(sibling_syn(n));

  std::string out;
  out += "// Ties the traversals of the recursive group together.\n";
  out += template_header(tps);
  out += "struct " + knot + " {\n";
  for (const auto& p : first.decl.params)
    out += "  " + fn_type(syn_tparam(p), tparam(p)) + " " + param_fn(p) + ";\n";
  for (const auto& n : names) out += "  gt::Transformer " + n + "_trans;\n";
  for (const auto& plan : group) {
    const std::string n = plan.decl.name;
    const std::string value = plan.value_type();
    // The member's own gcata instantiation: its syn_ is syn_<n>_.
    std::vector<std::string> inst;
    for (const auto& p : plan.decl.params) {
      inst.push_back(tparam(p));
      inst.push_back(syn_tparam(p));
    }
    inst.push_back("inh_");
    inst.push_back(sibling_syn(n));
    for (const auto& sib : plan.siblings) inst.push_back(sibling_syn(sib));
    std::vector<std::string> args;
    for (const auto& p : plan.decl.params) args.push_back(param_fn(p));
    for (const auto& sib : plan.siblings) args.push_back(sib + "_fn()");
    args.push_back(n + "_trans");
    args.push_back("inh");
    args.push_back("subj");
    out += "\n";
    out += "  " + sibling_syn(n) + " run_" + n + "(const inh_& inh, const " +
           value + "& subj) const {\n";
    out += "    return " + n + "_gcata<" + join(inst, ", ") + ">(" +
           join(args, ", ") + ");\n";
    out += "  }\n";
    out += "  " + fn_type(sibling_syn(n), value) + " " + n + "_fn() const {\n";
    out += "    return [knot = *this](const inh_& inh, const " + value +
           "& subj) { return knot.run_" + n + "(inh, subj); };\n";
    out += "  }\n";
  }
  out += "};\n";
  return out;
}

std::string gen_traversal(const TypeDecl& decl, const adt::DeclEnv& env) {
  return gen_traversal(plan_type(decl, env));
}

std::string gen_abstract_transformer(const TypeDecl& decl,
                                     const adt::DeclEnv& env) {
  return gen_abstract_transformer(plan_type(decl, env));
}

// ---------------------------------------------------------------------------
// Plugins

std::string run_plugin(const Plugin& plugin, const TypePlan& plan) {
  const PluginSignature sig = plugin.inh_syn_signature(plan);
  const std::string cls = plugin.name + "_" + plan.decl.name;

  std::vector<std::string> class_params = value_tparams(plan);
  for (const auto& extra : sig.extra_params) {
    if (std::find(class_params.begin(), class_params.end(), extra) !=
        class_params.end())
      throw CodegenError(CodegenErrorKind::NameCollision, plan.decl.name,
                         "plugin `" + plugin.name + "` parameter `" + extra +
                             "` clashes with a type parameter");
    class_params.push_back(extra);
  }

  std::vector<std::string> inst;
  for (size_t i = 0; i < plan.decl.params.size(); ++i) {
    inst.push_back(tparam(plan.decl.params[i]));
    inst.push_back(sig.param_syn.at(i));
  }
  inst.push_back(sig.inh);
  inst.push_back(sig.syn);
  for (const auto& sib : plan.siblings) {
    adt::DeclEnv env(plan.table->decls.begin(), plan.table->decls.end());
    TypePlan sib_plan = plan_type(plan.sibling(sib), env);
    inst.push_back(plugin.inh_syn_signature(sib_plan).syn);
  }

  const bool dependent = !class_params.empty();
  const std::string tn = dependent ? "typename " : "";
  std::string out;
  out += template_header(class_params);
  out += "struct " + cls + " {\n";
  out += "  using abstract_type = " + plan.decl.name + "_t<" + join(inst, ", ") +
         ">;\n\n";
  out += "  static gt::Overrides methods() {\n";
  out += "    using slots_ = abstract_type;\n";
  out += "    return {\n";
  for (const auto& c : plan.ctors) {
    const std::string body = plugin.method_body(plan, c);
    auto named = [&](const std::string& type, const std::string& ident) {
      return mentions(body, ident) ? type + " " + ident : type;
    };
    std::vector<std::string> params = {
        named("const gt::Transformer&", "self"),
        named("const " + sig.inh + "&", "inh"),
        named("const " + tn + "slots_::aug&", "s")};
    for (const auto& a : c.args) {
      std::string type = a.rule == AugRule::Raw
                             ? "const " + a.handler_type + "&"
                             : "const " + tn + "slots_::" + a.handler_type + "&";
      params.push_back(named(type, a.var));
    }
    out += "        slots_::" + c.slot + ".bind(\n";
    out += "            [](" + join(params, ",\n               ") + ") -> " +
           sig.syn + " {\n";
    out += indent(body, 14) + "\n";
    out += "            }),\n";
  }
  out += "    };\n";
  out += "  }\n\n";
  out += "  static gt::Transformer make() {\n";
  out += "    return abstract_type::abstract().extend(\"" + cls +
         "\", methods());\n";
  out += "  }\n";
  out += "};\n";
  return out;
}

std::string run_plugin(const Plugin& plugin, const TypeDecl& decl,
                       const adt::DeclEnv& env) {
  return run_plugin(plugin, plan_type(decl, env));
}

void PluginRegistry::add(Plugin plugin) {
  std::string name = plugin.name;
  plugins_.insert_or_assign(std::move(name), std::move(plugin));
}

const Plugin& PluginRegistry::get(const std::string& name) const {
  auto it = plugins_.find(name);
  if (it == plugins_.end())
    throw CodegenError(CodegenErrorKind::UnknownPlugin, "",
                       "unknown plugin `" + name + "`");
  return it->second;
}

std::vector<std::string> PluginRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : plugins_) out.push_back(name);
  return out;
}

// ---------------------------------------------------------------------------
// Files

namespace {

void collect_headers(const TypePlan& plan, const ArgShape& s,
                     std::set<std::string>& std_headers,
                     std::set<std::string>& gen_headers) {
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, adt::External>) {
          for (const auto& a : v.args)
            collect_headers(plan, a, std_headers, gen_headers);
          if (auto b = builtins().find(v.name); b != builtins().end()) {
            if (!b->second.header.empty()) std_headers.insert(b->second.header);
          } else if (plan.table->decls.count(v.name) != 0 &&
                     v.name != plan.decl.name &&
                     std::find(plan.siblings.begin(), plan.siblings.end(),
                               v.name) == plan.siblings.end()) {
            gen_headers.insert(main_file_name(v.name));
          }
        } else if constexpr (std::is_same_v<V, adt::Tuple>) {
          std_headers.insert("<tuple>");
          for (const auto& a : v.items)
            collect_headers(plan, a, std_headers, gen_headers);
        } else if constexpr (std::is_same_v<V, adt::SelfRef>) {
          for (const auto& a : v.args)
            collect_headers(plan, a, std_headers, gen_headers);
        }
      },
      s.v);
}

std::string file_prologue(const std::string& what) {
  return "// Generated by gtc from " + what + ". Do not edit.\n#pragma once\n\n";
}

std::string open_ns(const GenOptions& o) {
  return "namespace " + o.ns + " {\n\n";
}
std::string close_ns(const GenOptions& o) {
  return "\n}  // namespace " + o.ns + "\n";
}

std::string main_file(const GenUnit& u, const GenOptions& options,
                      const std::vector<std::string>& earlier,
                      const std::vector<std::string>& later) {
  const TypePlan& plan = u.plan;
  std::set<std::string> std_headers = {"<array>", "<functional>",
                                       "<string_view>", "<utility>",
                                       "<variant>"};
  std::set<std::string> gen_headers;
  for (const auto& c : plan.ctors) {
    for (const auto& a : c.args)
      collect_headers(plan, a.shape, std_headers, gen_headers);
    if (c.ctor.is_tag() && c.ctor.origin->decl != plan.decl.name) {
      gen_headers.insert(main_file_name(c.ctor.origin->decl));
      for (const auto& a : c.ctor.origin->args)
        collect_headers(plan, a, std_headers, gen_headers);
    }
  }
  for (const auto& e : earlier) gen_headers.insert(main_file_name(e));

  std::string out = file_prologue("type `" + plan.decl.name + "`");
  for (const auto& h : std_headers) out += "#include " + h + "\n";
  out += "\n#include \"gt/runtime.hpp\"\n";
  if (!gen_headers.empty()) out += "\n";
  for (const auto& h : gen_headers) out += "#include \"" + h + "\"\n";
  out += "\n" + open_ns(options);
  for (const auto& l : later) {
    const auto& d = plan.sibling(l);
    std::vector<std::string> ps;
    for (const auto& p : d.params) ps.push_back(tparam(p));
    out += template_header(ps) + "struct " + l + ";\n";
  }
  if (!later.empty()) out += "\n";
  out += u.type_src + "\n" + u.abstract_transformer_src + "\n" +
         u.traversal_src;
  if (!u.knot_src.empty()) out += "\n" + u.knot_src;
  out += close_ns(options);
  return out;
}

std::string plugin_file(const std::string& plugin, const GenUnit& u,
                        const std::string& src, const GenOptions& options,
                        const std::vector<std::string>& headers) {
  std::string out = file_prologue("type `" + u.decl.name + "` by plugin `" +
                                  plugin + "`");
  std::set<std::string> std_headers(headers.begin(), headers.end());
  for (const auto& h : std_headers) out += "#include " + h + "\n";
  if (!std_headers.empty()) out += "\n";
  out += "#include \"gt/runtime.hpp\"\n";
  out += "#include \"" + main_file_name(u.decl.name) + "\"\n\n";
  out += open_ns(options) + src + close_ns(options);
  return out;
}

}  // namespace

std::vector<GenUnit> generate_module(const std::vector<TypeDecl>& decls,
                                     const std::vector<std::string>& plugins,
                                     const PluginRegistry& registry,
                                     const GenOptions& options,
                                     const adt::DeclEnv& env) {
  adt::DeclEnv scope = env;
  for (const auto& d : decls) scope.insert_or_assign(d.name, d);

  std::vector<const Plugin*> selected;
  for (const auto& p : plugins) selected.push_back(&registry.get(p));

  std::vector<ModuleError::Entry> errors;
  std::vector<GenUnit> units;
  for (const auto& d : decls) {
    try {
      adt::validate(d, scope);
      GenUnit u;
      u.decl = d;
      u.plan = plan_type(d, scope, options);
      u.type_src = gen_type(u.plan);
      u.abstract_transformer_src = gen_abstract_transformer(u.plan);
      u.traversal_src = gen_traversal(u.plan);
      for (const Plugin* p : selected)
        u.plugin_srcs.emplace(p->name, run_plugin(*p, u.plan));
      units.push_back(std::move(u));
    } catch (const std::exception& e) {
      errors.push_back({d.name, e.what()});
    }
  }
  if (!errors.empty()) throw ModuleError(std::move(errors));

  // Namespace-level names must be unique across the module.
  std::map<std::string, std::string> owners;
  auto own = [&](const std::string& ident, const std::string& decl) {
    auto [it, fresh] = owners.emplace(ident, decl);
    if (!fresh && it->second != decl)
      errors.push_back({decl, "generated name `" + ident +
                                  "` is also produced for `" + it->second +
                                  "`"});
  };
  for (const auto& u : units) {
    const std::string& n = u.decl.name;
    own(n, n);
    own(n + "_t", n);
    own(n + "_gcata", n);
    for (const auto& p : plugins) own(p + "_" + n, n);
    for (const auto& c : u.plan.ctors)
      if (c.ctor.is_tag() && c.ctor.origin->decl == n) own(c.cpp_name, n);
  }
  if (!errors.empty()) throw ModuleError(std::move(errors));

  // Knots: attached to the last member of each recursive group present.
  for (size_t i = 0; i < units.size(); ++i) {
    const auto& cluster = units[i].decl.cluster;
    if (cluster.empty()) continue;
    bool last = true;
    for (size_t j = i + 1; j < units.size(); ++j)
      if (std::find(cluster.begin(), cluster.end(), units[j].decl.name) !=
          cluster.end())
        last = false;
    if (!last) continue;
    std::vector<TypePlan> group;
    for (const auto& u : units)
      if (&u == &units[i] ||
          std::find(cluster.begin(), cluster.end(), u.decl.name) !=
              cluster.end())
        group.push_back(u.plan);
    units[i].knot_src = gen_knot(group);
  }

  for (size_t i = 0; i < units.size(); ++i) {
    GenUnit& u = units[i];
    std::vector<std::string> earlier, later;
    for (const auto& sib : u.decl.cluster) {
      bool before = false;
      for (size_t j = 0; j < i; ++j)
        if (units[j].decl.name == sib) before = true;
      (before ? earlier : later).push_back(sib);
    }
    u.files.emplace_back(main_file_name(u.decl.name),
                         main_file(u, options, earlier, later));
    for (const Plugin* p : selected)
      u.files.emplace_back(plugin_file_name(p->name, u.decl.name),
                           plugin_file(p->name, u, u.plugin_srcs.at(p->name),
                                       options, p->headers));
  }
  return units;
}

}  // namespace gt::codegen
