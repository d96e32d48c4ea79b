// The checked-in generated headers and the gtc invocations that produce
// them (kept in step with the `regen` target).
#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gt/adt.hpp"
#include "gt/codegen.hpp"

namespace goldens {

struct Group {
  std::vector<std::string> inputs;
  std::vector<std::string> uses;
  std::vector<std::string> plugins;
};

inline const std::vector<Group>& groups() {
  static const std::vector<Group> all = {
      {{"lam.gt"}, {}, {"show", "foldl"}},
      {{"t.gt"}, {}, {"show", "foldl", "map"}},
      {{"var.gt", "arith.gt", "expr.gt"}, {}, {"show", "map"}},
      {{"neg.gt"}, {"var.gt", "arith.gt", "expr.gt"}, {"show", "map"}},
      {{"tree.gt"}, {}, {"show", "foldl", "map"}},
      {{"shape.gt"}, {}, {"show", "foldl", "map"}},
  };
  return all;
}

inline std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<gt::adt::TypeDecl> load(const std::string& file, const gt::adt::DeclEnv& env) {
  return gt::adt::parse_type_decls(read(std::filesystem::path(GT_DECL_DIR) / file), env);
}

/// Generated files for one group, as gtc would write them.
inline std::vector<std::pair<std::string, std::string>> generate(const Group& g) {
  gt::adt::DeclEnv env;
  for (const auto& u : g.uses)
    for (auto& d : load(u, env)) env.insert_or_assign(d.name, d);
  gt::adt::DeclEnv scope = env;
  std::vector<gt::adt::TypeDecl> decls;
  for (const auto& in : g.inputs)
    for (auto& d : load(in, scope)) {
      scope.insert_or_assign(d.name, d);
      decls.push_back(std::move(d));
    }
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& u : gt::codegen::generate_module(decls, g.plugins, gt::codegen::PluginRegistry::with_builtins(), {}, env))
    for (auto& f : u.files) out.push_back(std::move(f));
  return out;
}

inline std::string checked_in(const std::string& name) {
  return read(std::filesystem::path(GT_GEN_DIR) / name);
}

}  // namespace goldens
