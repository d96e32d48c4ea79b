// Untyped lambda calculus on top of the generated `lam` type: variable
// collection, capture-avoiding substitution, and seven reduction strategies
// assembled from reusable traits.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gt/gen/foldl_lam_gen.hpp"
#include "gt/gen/show_lam_gen.hpp"
#include "gt/runtime.hpp"

namespace gt::lambda {

using Term = gen::lam;
using Names = std::set<std::string>;

Term var(std::string name);
Term app(Term fun, Term arg);
Term lam(std::string binder, Term body);

/// `Var (x)`, `App (f, a)`, `Lam (x, b)`.
std::string show(const Term& t);

/// Every variable occurrence (binders alone are not counted).
Names term_vars(const Term& t);
Names free_vars(const Term& t);
/// Binder names; not part of term_vars.
Names binders(const Term& t);

/// Fresh names by appending primes.
class NameGen {
 public:
  explicit NameGen(Names taken = {}) : taken_(std::move(taken)) {}
  std::string next(const std::string& x);
  const Names& taken() const { return taken_; }

 private:
  Names taken_;
};

/// `body[x := payload]`, renaming binders that would capture a free
/// variable of `payload`.
Term subst(NameGen& gen, const std::string& x, const Term& payload,
           const Term& body);

/// Equality up to renaming of bound variables.
bool alpha_eq(const Term& a, const Term& b);

class TermParseError : public std::runtime_error {
 public:
  TermParseError(size_t offset, const std::string& message)
      : std::runtime_error("column " + std::to_string(offset + 1) + ": " +
                           message),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Reads `\x y. body` notation (application by juxtaposition, parentheses)
/// as well as the output of `show`.
Term parse_term(std::string_view text);

enum class Strategy { bn, nor, bv, ao, ha, he, hn };

inline constexpr std::array<Strategy, 7> kStrategies = {
    Strategy::bn, Strategy::nor, Strategy::bv, Strategy::ao,
    Strategy::ha, Strategy::he,  Strategy::hn};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);
/// Long name, e.g. "call-by-name".
std::string_view strategy_title(Strategy s);

inline constexpr long kDefaultFuel = 10000;

/// Raised when a reduction needs more beta steps than allowed.
class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted(long fuel, std::vector<Term> trace)
      : std::runtime_error("out of fuel after " + std::to_string(fuel) +
                           " beta steps"),
        fuel_(fuel),
        trace_(std::move(trace)) {}
  long fuel() const { return fuel_; }
  /// Snapshots recorded before running out (traced runs only).
  const std::vector<Term>& trace() const { return trace_; }

 private:
  long fuel_;
  std::vector<Term> trace_;
};

/// Which inherited attribute a reducer is built for: plain name generation,
/// or name generation plus the context of the current subterm.
enum class Mode { simple, traced };

/// The base reducer: c_Var, c_App and the extra slots `head`, `arg` and
/// `subst_arg`, with `head` defaulting to the reducer itself.
Transformer reducer(Mode mode);

/// Names of the reusable partial handler tables.
std::vector<std::string> trait_names();
/// A named trait; throws std::out_of_range for unknown names.
Overrides trait(Mode mode, std::string_view name);
/// Override of `head` that reduces the head position with `inner`.
Overrides head_by(Mode mode, Strategy inner);

/// The strategy's transformer; layers are the traits it is made of.
Transformer strategy(Strategy s, Mode mode = Mode::simple);

Term reduce(Strategy s, const Term& t, long fuel = kDefaultFuel);
/// Runs any reducer built for Mode::simple.
Term reduce(const Transformer& reducer, const Term& t,
            long fuel = kDefaultFuel);

struct Traced {
  Term result;
  /// The whole term after each beta step.
  std::vector<Term> trace;
};

Traced reduce_with_trace(Strategy s, const Term& t, long fuel = kDefaultFuel);
Traced reduce_with_trace(const Transformer& reducer, const Term& t,
                         long fuel = kDefaultFuel);

/// Runs `fn` on a thread with a large stack and rethrows what it throws.
/// Reductions recurse once per beta step.
void run_on_large_stack(const std::function<void()>& fn);

}  // namespace gt::lambda
