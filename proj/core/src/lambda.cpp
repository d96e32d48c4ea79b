#include "gt/lambda.hpp"

#include <pthread.h>

#include <cctype>
#include <exception>
#include <map>
#include <memory>

namespace gt::lambda {

Term var(std::string name) { return Term::Var{std::move(name)}; }
Term app(Term fun, Term arg) {
  return Term::App{std::move(fun), std::move(arg)};
}
Term lam(std::string binder, Term body) {
  return Term::Lam{std::move(binder), std::move(body)};
}

std::string show(const Term& t) {
  static const Transformer tr = gen::show_lam::make();
  return gen::lam_gcata<unit, std::string>(tr, {}, t);
}

namespace {

using Fold = gen::lam_t<Names, Names>;

// Collects variable occurrences on top of the default fold.
const Transformer& vars_transformer() {
  static const Transformer tr = gen::foldl_lam<Names>::make().extend(
      "vars", {Fold::c_Var.bind([](const Transformer&, const Names& acc,
                                   const Fold::aug&, const std::string& x) {
        Names out = acc;
        out.insert(x);
        return out;
      })});
  return tr;
}

// Free variables: vars, with bound names removed under each binder.
const Transformer& fv_transformer() {
  static const Transformer tr = vars_transformer().extend(
      "free_vars",
      {Fold::c_Lam.bind([](const Transformer&, const Names& acc,
                           const Fold::aug&, const std::string& x,
                           const Fold::aug& body) {
        Names inner = body.fx(Names{});
        inner.erase(x);
        Names out = acc;
        out.insert(inner.begin(), inner.end());
        return out;
      })});
  return tr;
}

}  // namespace

Names term_vars(const Term& t) {
  return gen::lam_gcata<Names, Names>(vars_transformer(), {}, t);
}

Names free_vars(const Term& t) {
  return gen::lam_gcata<Names, Names>(fv_transformer(), {}, t);
}

Names binders(const Term& t) {
  static const Transformer tr = gen::foldl_lam<Names>::make().extend(
      "binders",
      {Fold::c_Lam.bind([](const Transformer&, const Names& acc,
                           const Fold::aug&, const std::string& x,
                           const Fold::aug& body) {
        Names out = acc;
        out.insert(x);
        return body.fx(out);
      })});
  return gen::lam_gcata<Names, Names>(tr, {}, t);
}

std::string NameGen::next(const std::string& x) {
  std::string n = x + "'";
  while (taken_.count(n) != 0) n += "'";
  taken_.insert(n);
  return n;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Inherited attribute of the substitution: pending binder renames and the
// free variables of the payload, which no binder may capture.
struct Substitutor {
  std::map<std::string, std::string> mapping;
  const Names* prohibited = nullptr;
  NameGen* gen = nullptr;
  // Cleared below a binder for the substituted variable.
  bool active = true;

  std::string subst(const std::string& x) const {
    auto it = mapping.find(x);
    return it == mapping.end() ? x : it->second;
  }

  std::pair<std::string, Substitutor> rename(const std::string& x) const {
    if (prohibited->count(x) == 0) return {x, *this};
    Substitutor next = *this;
    std::string fresh = gen->next(x);
    next.mapping[x] = fresh;
    return {fresh, next};
  }
};

using Sub = gen::lam_t<Substitutor, Term>;

Transformer substitution(const std::string& x, const Term& payload) {
  return Sub::abstract().extend(
      "subst",
      {Sub::c_Var.bind([x, payload](const Transformer&, const Substitutor& s,
                                    const Sub::aug&,
                                    const std::string& y) -> Term {
         if (s.active && y == x) return payload;
         return var(s.subst(y));
       }),
       Sub::c_App.bind([](const Transformer&, const Substitutor& s,
                          const Sub::aug&, const Sub::aug& l,
                          const Sub::aug& m) { return app(l.fx(s), m.fx(s)); }),
       Sub::c_Lam.bind([x](const Transformer&, const Substitutor& s,
                           const Sub::aug& z, const std::string& y,
                           const Sub::aug& l) -> Term {
         if (!s.active || y == x) {
           // Nothing more to insert below; pending renames still apply to
           // everything but the newly bound name.
           Substitutor inner = s;
           inner.active = false;
           inner.mapping.erase(y);
           if (inner.mapping.empty()) return z.x;
           return lam(y, l.fx(inner));
         }
         auto [y2, inner] = s.rename(y);
         return lam(y2, l.fx(inner));
       })});
}

}  // namespace

Term subst(NameGen& gen, const std::string& x, const Term& payload,
           const Term& body) {
  const Names fvs = free_vars(payload);
  Substitutor s;
  s.prohibited = &fvs;
  s.gen = &gen;
  return gen::lam_gcata<Substitutor, Term>(substitution(x, payload), s, body);
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

bool alpha_eq_in(const Term& a, const Term& b,
                 std::vector<std::pair<std::string, std::string>>& bound) {
  if (const auto* va = std::get_if<Term::Var>(&a.node)) {
    const auto* vb = std::get_if<Term::Var>(&b.node);
    if (vb == nullptr) return false;
    // The innermost binder of either name decides.
    for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
      const bool ha = it->first == va->_0;
      const bool hb = it->second == vb->_0;
      if (ha || hb) return ha && hb;
    }
    return va->_0 == vb->_0;
  }
  if (const auto* pa = std::get_if<Term::App>(&a.node)) {
    const auto* pb = std::get_if<Term::App>(&b.node);
    return pb != nullptr && alpha_eq_in(*pa->_0, *pb->_0, bound) &&
           alpha_eq_in(*pa->_1, *pb->_1, bound);
  }
  const auto& la = std::get<Term::Lam>(a.node);
  const auto* lb = std::get_if<Term::Lam>(&b.node);
  if (lb == nullptr) return false;
  bound.emplace_back(la._0, lb->_0);
  const bool eq = alpha_eq_in(*la._1, *lb->_1, bound);
  bound.pop_back();
  return eq;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  std::vector<std::pair<std::string, std::string>> bound;
  return alpha_eq_in(a, b, bound);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    skip_ws();
    Term t = looks_like_show() ? shown() : expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw TermParseError(pos_, msg);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'' ||
           c == '_';
  }

  std::string ident() {
    skip_ws();
    if (!ident_start(peek())) fail("expected an identifier");
    const size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool looks_like_show() const {
    for (std::string_view head : {"Var", "App", "Lam"}) {
      if (text_.substr(pos_, 3) != head) continue;
      size_t p = pos_ + 3;
      while (p < text_.size() && text_[p] == ' ') ++p;
      if (p < text_.size() && text_[p] == '(') return true;
    }
    return false;
  }

  // Lambda notation: abstractions extend as far right as possible.
  Term expr() {
    skip_ws();
    if (peek() == '\\') {
      ++pos_;
      std::vector<std::string> names{ident()};
      skip_ws();
      while (ident_start(peek())) {
        names.push_back(ident());
        skip_ws();
      }
      expect('.');
      Term body = expr();
      for (auto it = names.rbegin(); it != names.rend(); ++it)
        body = lam(*it, std::move(body));
      return body;
    }
    Term t = atom();
    for (;;) {
      skip_ws();
      if (peek() == '\\') return app(std::move(t), expr());
      if (!ident_start(peek()) && peek() != '(') return t;
      t = app(std::move(t), atom());
    }
  }

  Term atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Term t = expr();
      expect(')');
      return t;
    }
    return var(ident());
  }

  // The show format; names run up to the next ',' or ')'.
  std::string shown_name(char stop) {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != stop) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (name.empty()) fail("expected a variable name");
    return name;
  }

  Term shown() {
    skip_ws();
    const std::string head(text_.substr(pos_, 3));
    if (head != "Var" && head != "App" && head != "Lam")
      fail("expected Var, App or Lam");
    pos_ += 3;
    expect('(');
    Term t = var("");
    if (head == "Var") {
      t = var(shown_name(')'));
    } else if (head == "App") {
      Term f = shown();
      expect(',');
      t = app(std::move(f), shown());
    } else {
      std::string x = shown_name(',');
      expect(',');
      t = lam(std::move(x), shown());
    }
    expect(')');
    return t;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

// ---------------------------------------------------------------------------
// Strategies

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::bn: return "bn";
    case Strategy::nor: return "nor";
    case Strategy::bv: return "bv";
    case Strategy::ao: return "ao";
    case Strategy::ha: return "ha";
    case Strategy::he: return "he";
    case Strategy::hn: return "hn";
  }
  return "";
}

std::string_view strategy_title(Strategy s) {
  switch (s) {
    case Strategy::bn: return "call-by-name";
    case Strategy::nor: return "normal order";
    case Strategy::bv: return "call-by-value";
    case Strategy::ao: return "applicative order";
    case Strategy::ha: return "hybrid applicative order";
    case Strategy::he: return "head spine";
    case Strategy::hn: return "hybrid normal order";
  }
  return "";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  for (Strategy s : kStrategies)
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

namespace {

// State of one reduction run, shared by every context derived from it.
struct Session {
  NameGen gen;
  long fuel = kDefaultFuel;
  long steps = 0;
  std::vector<Term> trace;
};

struct SimpleCtx {
  std::shared_ptr<Session> session;
};

struct TraceCtx {
  std::shared_ptr<Session> session;
  /// Plugs a term into the surrounding context.
  std::function<Term(const Term&)> hole;

  TraceCtx inside(std::function<Term(const Term&)> f) const {
    return {session, [outer = hole, f = std::move(f)](const Term& t) {
              return outer(f(t));
            }};
  }
};

// One beta step: checks fuel and performs the substitution.
Term contract(Session& session, const std::string& x, const Term& arg,
              const Term& body) {
  if (++session.steps > session.fuel)
    throw FuelExhausted(session.fuel, std::move(session.trace));
  return subst(session.gen, x, arg, body);
}

// The parts that depend on the inherited attribute.
template <class Ctx>
struct Base;

// Everything else is shared between the two attribute types.
template <class Ctx>
struct Reductions {
  using A = gen::lam_t<Ctx, Term>;
  using aug = typename A::aug;
  using Method = Slot<Term(const Transformer&, const Ctx&, const aug&)>;

  static constexpr Method head{"head"};
  static constexpr Method arg{"arg"};
  static constexpr Method subst_arg{"subst_arg"};

  static Term run(const Transformer& r, const Ctx& c, const Term& t) {
    return gen::lam_gcata<Ctx, Term>(r, c, t);
  }

  static Transformer reducer() {
    Overrides methods = {
        head.bind([](const Transformer&, const Ctx& c, const aug& x) {
          return x.fx(c);
        }),
        A::c_Var.bind([](const Transformer&, const Ctx&, const aug& s,
                         const std::string&) { return s.x; }),
        Base<Ctx>::c_App(),
    };
    return A::abstract().derive("reducer", {"head", "arg", "subst_arg"},
                                std::move(methods));
  }

  static Overrides trait(std::string_view name) {
    if (name == "reduce_under_abstractions")
      return {Base<Ctx>::c_Lam()};
    if (name == "dont_reduce_under_abstractions")
      return {A::c_Lam.bind([](const Transformer&, const Ctx&, const aug& s,
                               const std::string&,
                               const aug&) { return s.x; })};
    if (name == "reduce_arguments")
      return {arg.bind([](const Transformer&, const Ctx& c, const aug& x) {
        return x.fx(c);
      })};
    if (name == "dont_reduce_arguments")
      return {arg.bind(
          [](const Transformer&, const Ctx&, const aug& x) { return x.x; })};
    if (name == "non_strict")
      return {subst_arg.bind(
          [](const Transformer&, const Ctx&, const aug& m) { return m.x; })};
    if (name == "strict")
      return {subst_arg.bind([](const Transformer&, const Ctx& c,
                                const aug& m) { return m.fx(c); })};
    throw std::out_of_range("unknown trait: " + std::string(name));
  }

  static Overrides head_by(const Transformer& inner) {
    return {head.bind([inner](const Transformer&, const Ctx& c, const aug& x) {
      return run(inner, c, x.x);
    })};
  }

  static Transformer compose(const std::vector<std::string>& traits) {
    Transformer t = reducer();
    for (const auto& name : traits) t = t.extend(name, trait(name));
    return t;
  }

  static Transformer with_head(const Transformer& t, Strategy inner,
                               const Transformer& inner_t) {
    return t.extend("head=" + std::string(strategy_name(inner)),
                    head_by(inner_t));
  }

  struct Table {
    std::map<Strategy, Transformer> by_strategy;
  };

  static const Table& table() {
    static const Table tbl = [] {
      Table t;
      auto& m = t.by_strategy;
      m.emplace(Strategy::bn, compose({"dont_reduce_under_abstractions",
                                       "dont_reduce_arguments", "non_strict"}));
      m.emplace(Strategy::nor,
                with_head(compose({"reduce_under_abstractions",
                                   "reduce_arguments", "non_strict"}),
                          Strategy::bn, m.at(Strategy::bn)));
      m.emplace(Strategy::bv, compose({"dont_reduce_under_abstractions",
                                       "reduce_arguments", "strict"}));
      m.emplace(Strategy::ao, m.at(Strategy::bv).extend(
                                  "reduce_under_abstractions",
                                  trait("reduce_under_abstractions")));
      m.emplace(Strategy::ha, with_head(m.at(Strategy::ao), Strategy::bv,
                                        m.at(Strategy::bv)));
      m.emplace(Strategy::he, m.at(Strategy::bn).extend(
                                  "reduce_under_abstractions",
                                  trait("reduce_under_abstractions")));
      m.emplace(Strategy::hn, with_head(m.at(Strategy::nor), Strategy::he,
                                        m.at(Strategy::he)));
      return t;
    }();
    return tbl;
  }
};

template <>
struct Base<SimpleCtx> {
  using R = Reductions<SimpleCtx>;
  using A = R::A;
  using aug = R::aug;

  static Override c_App() {
    return A::c_App.bind([](const Transformer& self, const SimpleCtx& c,
                            const aug& s, const aug& l,
                            const aug& m) -> Term {
      Term h = self.call(R::head, c, l);
      if (const auto* f = std::get_if<Term::Lam>(&h.node))
        return s.f(c, contract(*c.session, f->_0,
                               self.call(R::subst_arg, c, m), *f->_1));
      Term l2 = s.f(c, h);
      return app(std::move(l2), self.call(R::arg, c, m));
    });
  }

  static Override c_Lam() {
    return A::c_Lam.bind([](const Transformer&, const SimpleCtx& c,
                            const aug&, const std::string& x, const aug& l) {
      return lam(x, l.fx(c));
    });
  }
};

template <>
struct Base<TraceCtx> {
  using R = Reductions<TraceCtx>;
  using A = R::A;
  using aug = R::aug;

  static Override c_App() {
    return A::c_App.bind([](const Transformer& self, const TraceCtx& c,
                            const aug& s, const aug& l,
                            const aug& m) -> Term {
      const Term arg = m.x;
      Term h = self.call(R::head,
                         c.inside([arg](const Term& t) { return app(t, arg); }),
                         l);
      if (const auto* f = std::get_if<Term::Lam>(&h.node)) {
        const Term fun = h;
        Term v = self.call(
            R::subst_arg,
            c.inside([fun](const Term& t) { return app(fun, t); }), m);
        Term contractum = contract(*c.session, f->_0, v, *f->_1);
        c.session->trace.push_back(c.hole(contractum));
        return s.f(c, contractum);
      }
      Term l2 = s.f(c.inside([arg](const Term& t) { return app(t, arg); }), h);
      return app(l2, self.call(R::arg,
                               c.inside([l2](const Term& t) {
                                 return app(l2, t);
                               }),
                               m));
    });
  }

  static Override c_Lam() {
    return A::c_Lam.bind([](const Transformer&, const TraceCtx& c,
                            const aug&, const std::string& x, const aug& l) {
      return lam(x, l.fx(c.inside([x](const Term& t) { return lam(x, t); })));
    });
  }
};

std::shared_ptr<Session> new_session(const Term& t, long fuel) {
  auto session = std::make_shared<Session>();
  Names taken = term_vars(t);
  for (const auto& b : binders(t)) taken.insert(b);
  session->gen = NameGen(std::move(taken));
  session->fuel = fuel;
  return session;
}

}  // namespace

Transformer reducer(Mode mode) {
  return mode == Mode::simple ? Reductions<SimpleCtx>::reducer()
                              : Reductions<TraceCtx>::reducer();
}

std::vector<std::string> trait_names() {
  return {"reduce_under_abstractions", "dont_reduce_under_abstractions",
          "reduce_arguments",          "dont_reduce_arguments",
          "non_strict",                "strict"};
}

Overrides trait(Mode mode, std::string_view name) {
  return mode == Mode::simple ? Reductions<SimpleCtx>::trait(name)
                              : Reductions<TraceCtx>::trait(name);
}

Overrides head_by(Mode mode, Strategy inner) {
  return mode == Mode::simple
             ? Reductions<SimpleCtx>::head_by(strategy(inner, mode))
             : Reductions<TraceCtx>::head_by(strategy(inner, mode));
}

Transformer strategy(Strategy s, Mode mode) {
  return mode == Mode::simple
             ? Reductions<SimpleCtx>::table().by_strategy.at(s)
             : Reductions<TraceCtx>::table().by_strategy.at(s);
}

void run_on_large_stack(const std::function<void()>& fn) {
  struct Job {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } job{&fn, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, size_t{1} << 30);
  pthread_t thread;
  const int rc = pthread_create(
      &thread, &attr,
      [](void* p) -> void* {
        auto* j = static_cast<Job*>(p);
        try {
          (*j->fn)();
        } catch (...) {
          j->error = std::current_exception();
        }
        return nullptr;
      },
      &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    fn();
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

Term reduce(const Transformer& r, const Term& t, long fuel) {
  std::optional<Term> out;
  run_on_large_stack([&] {
    SimpleCtx c{new_session(t, fuel)};
    out = Reductions<SimpleCtx>::run(r, c, t);
  });
  return *out;
}

Term reduce(Strategy s, const Term& t, long fuel) {
  return reduce(strategy(s, Mode::simple), t, fuel);
}

Traced reduce_with_trace(const Transformer& r, const Term& t, long fuel) {
  std::optional<Traced> out;
  run_on_large_stack([&] {
    auto session = new_session(t, fuel);
    TraceCtx c{session, [](const Term& x) { return x; }};
    Term result = Reductions<TraceCtx>::run(r, c, t);
    out = Traced{std::move(result), std::move(session->trace)};
  });
  return *out;
}

Traced reduce_with_trace(Strategy s, const Term& t, long fuel) {
  return reduce_with_trace(strategy(s, Mode::traced), t, fuel);
}

}  // namespace gt::lambda
