// gtc: code generation, lambda reduction and expression evaluation from the
// command line.
//
// Exit codes: 0 ok, 1 user error, 2 I/O error, 3 reduction ran out of fuel.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "gt/adt.hpp"
#include "gt/codegen.hpp"
#include "gt/expr.hpp"
#include "gt/lambda.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kIoError = 2;
constexpr int kOutOfFuel = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

std::vector<gt::adt::TypeDecl> parse_file(const std::string& path,
                                          const gt::adt::DeclEnv& env) {
  const std::string source = read_file(path);
  try {
    return gt::adt::parse_type_decls(source, env);
  } catch (const gt::adt::ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  } catch (const gt::adt::ValidationError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

struct GenArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> uses;
  std::vector<std::string> plugins;
  std::string outdir = ".";
};

int cmd_gen(const GenArgs& args) {
  gt::adt::DeclEnv env;
  for (const auto& path : args.uses)
    for (auto& d : parse_file(path, env)) env.insert_or_assign(d.name, d);

  std::vector<gt::adt::TypeDecl> decls;
  gt::adt::DeclEnv scope = env;
  for (const auto& path : args.inputs)
    for (auto& d : parse_file(path, scope)) {
      scope.insert_or_assign(d.name, d);
      decls.push_back(std::move(d));
    }

  const auto units = gt::codegen::generate_module(
      decls, args.plugins, gt::codegen::PluginRegistry::with_builtins(), {},
      env);

  std::error_code ec;
  fs::create_directories(args.outdir, ec);
  if (ec) throw IoError("cannot create " + args.outdir + ": " + ec.message());
  nlohmann::json manifest = nlohmann::json::array();
  for (const auto& u : units) {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& [name, text] : u.files) {
      const fs::path path = fs::path(args.outdir) / name;
      write_file(path, text);
      files.push_back(path.string());
    }
    manifest.push_back(
        {{"decl", u.decl.name}, {"files", files}, {"plugins", args.plugins}});
  }
  write_file(fs::path(args.outdir) / "manifest.json", manifest.dump(2) + "\n");
  return kOk;
}

struct ReduceArgs {
  std::string term;
  std::string strategy = "nor";
  bool trace = false;
  std::optional<long> fuel;
};

long default_fuel() {
  if (const char* env = std::getenv("GT_FUEL")) {
    try {
      size_t used = 0;
      const long fuel = std::stol(env, &used);
      if (used == std::string_view(env).size() && fuel >= 0) return fuel;
    } catch (const std::exception&) {
    }
    throw std::runtime_error(std::string("GT_FUEL is not a fuel amount: ") +
                             env);
  }
  return gt::lambda::kDefaultFuel;
}

int cmd_reduce(const ReduceArgs& args) {
  using namespace gt::lambda;
  const auto strategy = strategy_from_name(args.strategy);
  if (!strategy) {
    std::string names;
    for (Strategy s : kStrategies)
      names += (names.empty() ? "" : ", ") + std::string(strategy_name(s));
    std::cerr << "gtc: unknown strategy " << args.strategy
              << " (expected one of " << names << ")\n";
    return kUserError;
  }
  const Term term = parse_term(args.term);
  const long fuel = args.fuel ? *args.fuel : default_fuel();
  try {
    if (args.trace) {
      const Traced out = reduce_with_trace(*strategy, term, fuel);
      for (const auto& step : out.trace) std::cout << show(step) << "\n";
      std::cout << show(out.result) << "\n";
    } else {
      std::cout << show(reduce(*strategy, term, fuel)) << "\n";
    }
  } catch (const FuelExhausted& e) {
    for (const auto& step : e.trace()) std::cout << show(step) << "\n";
    std::cerr << "gtc: " << e.what() << "\n";
    return kOutOfFuel;
  }
  return kOk;
}

int cmd_eval(const std::string& text, const std::vector<std::string>& binds) {
  std::map<std::string, std::int64_t, std::less<>> bindings;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::runtime_error("binding must look like name=value: " + b);
    const std::string value = b.substr(eq + 1);
    size_t used = 0;
    std::int64_t n = 0;
    try {
      n = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size())
      throw std::runtime_error("not an integer: " + value);
    bindings[b.substr(0, eq)] = n;
  }
  const auto e = gt::expr::parse_expr(text);
  std::cout << gt::expr::eval(gt::expr::env_from(std::move(bindings)), e)
            << "\n";
  return kOk;
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic transformations: code generation and showcases"};
  app.require_subcommand(1);

  GenArgs gen;
  std::vector<std::string> with;
  auto* gen_cmd = app.add_subcommand("gen", "Generate C++ from type declarations");
  gen_cmd->add_option("inputs", gen.inputs, "Declaration files")->required();
  gen_cmd->add_option("--with", with, "Plugins to run (comma separated)");
  gen_cmd->add_option("--use", gen.uses,
                      "Declarations to resolve against without generating");
  gen_cmd->add_option("-o,--out", gen.outdir, "Output directory");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a lambda term");
  reduce_cmd->add_option("term", reduce.term, "Term, e.g. \"(\\x. x) y\"")
      ->required();
  reduce_cmd->add_option("-s,--strategy", reduce.strategy,
                         "bn, nor, bv, ao, ha, he or hn");
  reduce_cmd->add_flag("--trace", reduce.trace,
                       "Print the term after every beta step");
  reduce_cmd->add_option("--fuel", reduce.fuel, "Maximum number of beta steps")
      ->check(CLI::NonNegativeNumber);

  std::string show_term;
  auto* show_cmd = app.add_subcommand("show", "Print a lambda term");
  show_cmd->add_option("term", show_term, "Term")->required();

  std::string expr_text;
  std::vector<std::string> binds;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an arithmetic expression");
  eval_cmd->add_option("expr", expr_text, "Expression")->required();
  eval_cmd->add_option("-b,--bind", binds, "Variable binding name=int");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (*gen_cmd) {
      gen.plugins = split_commas(with);
      return cmd_gen(gen);
    }
    if (*reduce_cmd) return cmd_reduce(reduce);
    if (*show_cmd) {
      std::cout << gt::lambda::show(gt::lambda::parse_term(show_term)) << "\n";
      return kOk;
    }
    if (*eval_cmd) return cmd_eval(expr_text, binds);
  } catch (const IoError& e) {
    std::cerr << "gtc: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "gtc: " << e.what() << "\n";
    return kUserError;
  }
  return kOk;
}
