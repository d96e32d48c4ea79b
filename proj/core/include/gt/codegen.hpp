// C++ code generation from type declarations.
//
// For every declaration `t` the generator emits, into `t_gen.hpp`:
//   * the value type `t` (a std::variant of constructor structs),
//   * the abstract transformer `t_t` (one typed slot per constructor),
//   * the traversal function `t_gcata`.
// Each requested plugin `p` adds `p_t_gen.hpp` holding a concrete
// transformer `p_t` built on top of `t_t`.
//
// Naming inside emitted code: a type parameter 'a becomes template
// parameter `a_`, its synthesized type `ta_`; the attributes are `inh_` and
// `syn_`; in a mutually recursive group the synthesized type of sibling `u`
// is `syn_u_`.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gt/adt.hpp"

namespace gt::codegen {

/// How the traversal treats one constructor argument.
enum class AugRule {
  Param = 1,  // augmented with the parameter's transformation
  Self = 2,   // augmented with the traversal itself (or a group sibling's)
  Raw = 3,    // passed as is
};

struct ArgPlan {
  adt::ArgShape shape;
  AugRule rule;
  /// Parameter name for Param, type name for Self (own or sibling).
  std::string target;
  std::string var;           // x0, x1, ...
  std::string storage_type;  // member type in the constructor struct
  std::string handler_type;  // type the handler receives
};

struct CtorPlan {
  adt::CtorDecl ctor;
  std::string slot;      // c_<Name>
  std::string cpp_name;  // struct name
  std::vector<ArgPlan> args;
};

/// What the generator knows about the types it can spell.
struct TypeTable {
  std::map<std::string, adt::TypeDecl, std::less<>> decls;
  /// Extra nullary external types: OCaml name -> C++ type.
  std::map<std::string, std::string, std::less<>> externals;
};

using Rename = std::map<std::string, std::string>;

/// Structured intermediate form of one declaration.
struct TypePlan {
  adt::TypeDecl decl;  // resolved
  std::vector<std::string> siblings;
  /// Abstract transformer parameters in order, e.g. a, ta, b, tb, inh, syn.
  std::vector<std::string> abstract_params;
  std::vector<CtorPlan> ctors;
  std::shared_ptr<const TypeTable> table;

  bool templated() const { return !decl.params.empty(); }
  /// `t<a_, b_>`; `rename` maps parameter names to replacement C++ types.
  std::string value_type(const Rename& rename = {}) const;
  std::string ctor_type(const CtorPlan& c, const Rename& rename = {}) const;
  std::string storage_type(const adt::ArgShape& s,
                           const Rename& rename = {}) const;
  /// Whether values of `s` are stored boxed (generated types).
  bool boxed(const adt::ArgShape& s) const;
  const adt::TypeDecl& sibling(const std::string& name) const;
};

enum class CodegenErrorKind {
  UnsupportedShape,
  NameCollision,
  UnknownPlugin,
  InvalidDecl,
};

class CodegenError : public std::runtime_error {
 public:
  CodegenError(CodegenErrorKind kind, std::string decl,
               const std::string& message);
  CodegenErrorKind kind() const { return kind_; }
  const std::string& decl() const { return decl_; }

 private:
  CodegenErrorKind kind_;
  std::string decl_;
};

/// Per-declaration failures collected by generate_module.
class ModuleError : public std::runtime_error {
 public:
  struct Entry {
    std::string decl;
    std::string message;
  };
  explicit ModuleError(std::vector<Entry> entries);
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Types a plugin's transformer is instantiated at.
struct PluginSignature {
  /// Template parameters the plugin class adds beyond the value parameters.
  std::vector<std::string> extra_params;
  std::string inh;
  std::string syn;
  /// Synthesized type for each type parameter, in declaration order.
  std::vector<std::string> param_syn;
};

struct Plugin {
  std::string name;
  std::function<PluginSignature(const TypePlan&)> inh_syn_signature;
  /// Body of the handler for one constructor. In scope: `self` (the
  /// transformer), `inh`, `s` (the augmented node) and `x0`, `x1`, ...
  std::function<std::string(const TypePlan&, const CtorPlan&)> method_body;
  /// Extra headers the generated plugin file includes.
  std::vector<std::string> headers;
};

class PluginRegistry {
 public:
  /// Registry preloaded with show, foldl and map.
  static PluginRegistry with_builtins();

  void add(Plugin plugin);
  const Plugin& get(const std::string& name) const;  // throws UnknownPlugin
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Plugin> plugins_;
};

struct GenOptions {
  std::string ns = "gt::gen";
  std::map<std::string, std::string, std::less<>> externals;
};

struct GenUnit {
  adt::TypeDecl decl;
  TypePlan plan;
  std::string type_src;  // value type definition
  std::string traversal_src;
  std::string abstract_transformer_src;
  std::string knot_src;  // only on the last member of a recursive group
  std::map<std::string, std::string> plugin_srcs;
  /// Complete file contents keyed by file name, main header first.
  std::vector<std::pair<std::string, std::string>> files;
};

/// Builds the intermediate form. `env` supplies included fragments, group
/// siblings and other types referenced by name.
TypePlan plan_type(const adt::TypeDecl& decl, const adt::DeclEnv& env = {},
                   const GenOptions& options = {});

std::string gen_type(const TypePlan& plan);
std::string gen_traversal(const TypePlan& plan);
std::string gen_abstract_transformer(const TypePlan& plan);
std::string gen_knot(const std::vector<TypePlan>& group);

std::string gen_traversal(const adt::TypeDecl& decl,
                          const adt::DeclEnv& env = {});
std::string gen_abstract_transformer(const adt::TypeDecl& decl,
                                     const adt::DeclEnv& env = {});

/// Emits the concrete transformer class `<plugin>_<type>`.
std::string run_plugin(const Plugin& plugin, const TypePlan& plan);
std::string run_plugin(const Plugin& plugin, const adt::TypeDecl& decl,
                       const adt::DeclEnv& env = {});

std::vector<GenUnit> generate_module(const std::vector<adt::TypeDecl>& decls,
                                     const std::vector<std::string>& plugins,
                                     const PluginRegistry& registry =
                                         PluginRegistry::with_builtins(),
                                     const GenOptions& options = {},
                                     const adt::DeclEnv& env = {});

std::string main_file_name(const std::string& type);
std::string plugin_file_name(const std::string& plugin,
                             const std::string& type);

// Emitted identifier helpers, shared with plugins.
std::string tparam(const std::string& p);       // a -> a_
std::string syn_tparam(const std::string& p);   // a -> ta_
std::string sibling_syn(const std::string& t);  // u -> syn_u_

}  // namespace gt::codegen
