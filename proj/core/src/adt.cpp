#include "gt/adt.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace gt::adt {

ArgShape param(std::string name) { return {ParamRef{std::move(name)}}; }
ArgShape self_ref(std::vector<ArgShape> args) {
  return {SelfRef{std::move(args)}};
}
ArgShape external(std::string name, std::vector<ArgShape> args) {
  return {External{std::move(name), std::move(args)}};
}
ArgShape tuple(std::vector<ArgShape> items) {
  return {Tuple{std::move(items)}};
}

const std::vector<CtorDecl>& TypeDecl::ctors() const {
  if (const auto* v = std::get_if<Variants>(&body)) return v->ctors;
  throw ValidationError(ValidationKind::UnresolvedOpenSum, name,
                        "open sum `" + name + "` must be resolved first");
}

bool TypeDecl::is_structural() const {
  const auto* v = std::get_if<Variants>(&body);
  return v != nullptr && !v->ctors.empty() && v->ctors.front().is_tag();
}

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string describe_expected(const std::vector<std::string>& expected) {
  if (expected.empty()) return "";
  if (expected.size() == 1) return "expected " + expected.front();
  return "expected one of " + join(expected, ", ");
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::string found,
                       std::vector<std::string> expected)
    : std::runtime_error(std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": unexpected " + found +
                         (expected.empty() ? "" : "; ") +
                         describe_expected(expected)),
      pos_(pos),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

ValidationError::ValidationError(ValidationKind kind, std::string subject,
                                 const std::string& message)
    : std::runtime_error(message), kind_(kind), subject_(std::move(subject)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Type,
  And,
  Of,
  Ident,   // lowercase identifier
  UIdent,  // capitalised identifier
  Quote,
  Backtick,
  Eq,
  Bar,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Star,
  End,
};

std::string tok_name(Tok t) {
  switch (t) {
    case Tok::Type: return "'type'";
    case Tok::And: return "'and'";
    case Tok::Of: return "'of'";
    case Tok::Ident: return "identifier";
    case Tok::UIdent: return "constructor";
    case Tok::Quote: return "'''";
    case Tok::Backtick: return "'`'";
    case Tok::Eq: return "'='";
    case Tok::Bar: return "'|'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Star: return "'*'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '(' && i + 1 < src.size() && src[i + 1] == '*') {
      SourcePos start = pos;
      int depth = 0;
      do {
        if (src.substr(i, 2) == "(*") {
          ++depth;
          advance(2);
        } else if (src.substr(i, 2) == "*)") {
          --depth;
          advance(2);
        } else {
          advance(1);
        }
      } while (depth > 0 && i < src.size());
      if (depth > 0) throw ParseError(start, "unterminated comment", {"'*)'"});
      continue;
    }
    SourcePos at = pos;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), at});
      advance(1);
    };
    switch (c) {
      case '\'': single(Tok::Quote); continue;
      case '`': single(Tok::Backtick); continue;
      case '=': single(Tok::Eq); continue;
      case '|': single(Tok::Bar); continue;
      case '[': single(Tok::LBracket); continue;
      case ']': single(Tok::RBracket); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '*': single(Tok::Star); continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::UIdent
                                                             : Tok::Ident;
      if (word == "type") kind = Tok::Type;
      if (word == "and") kind = Tok::And;
      if (word == "of") kind = Tok::Of;
      out.push_back({kind, word, at});
      advance(j - i);
      continue;
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x80)
                            ? "character '" + std::string(1, c) + "'"
                            : "non-ASCII byte";
    throw ParseError(at, shown, {});
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<std::vector<TypeDecl>> groups() {
    std::vector<std::vector<TypeDecl>> out;
    while (peek().kind != Tok::End) {
      std::vector<TypeDecl> group;
      group.push_back(decl());
      while (accept(Tok::And)) group.push_back(decl(/*after_and=*/true));
      out.push_back(std::move(group));
      if (peek().kind != Tok::End && peek().kind != Tok::Type)
        fail({Tok::Type, Tok::And, Tok::Bar, Tok::End});
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (peek().kind != k) {
      expected_.insert(k);
      return false;
    }
    ++pos_;
    expected_.clear();
    return true;
  }

  Token expect(Tok k) {
    if (peek().kind != k) {
      expected_.insert(k);
      fail({});
    }
    expected_.clear();
    return toks_[pos_++];
  }

  [[noreturn]] void fail(std::initializer_list<Tok> also) {
    for (Tok k : also) expected_.insert(k);
    std::vector<std::string> names;
    for (Tok k : expected_) names.push_back(tok_name(k));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    const Token& t = peek();
    std::string found =
        t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, found, names);
  }

  TypeDecl decl(bool after_and = false) {
    if (!after_and) expect(Tok::Type);
    // `and type t = ...` is tolerated as well as `and t = ...`.
    if (after_and) accept(Tok::Type);
    TypeDecl d;
    if (accept(Tok::Quote)) {
      d.params.push_back(expect(Tok::Ident).text);
    } else if (peek().kind == Tok::LParen) {
      ++pos_;
      expected_.clear();
      expect(Tok::Quote);
      d.params.push_back(expect(Tok::Ident).text);
      while (accept(Tok::Comma)) {
        expect(Tok::Quote);
        d.params.push_back(expect(Tok::Ident).text);
      }
      expect(Tok::RParen);
    } else {
      expected_.insert(Tok::LParen);
    }
    d.name = expect(Tok::Ident).text;
    expect(Tok::Eq);
    if (accept(Tok::LBracket)) {
      OpenSum sum;
      sum.arms.push_back(arm());
      while (accept(Tok::Bar)) sum.arms.push_back(arm());
      expect(Tok::RBracket);
      d.body = std::move(sum);
    } else {
      Variants v;
      accept(Tok::Bar);  // optional leading bar
      v.ctors.push_back(ctor());
      while (accept(Tok::Bar)) v.ctors.push_back(ctor());
      d.body = std::move(v);
    }
    return d;
  }

  CtorDecl ctor(std::string prefix = "") {
    CtorDecl c;
    c.name = prefix + expect(Tok::UIdent).text;
    if (accept(Tok::Of)) {
      c.args.push_back(shape());
      while (accept(Tok::Star)) c.args.push_back(shape());
    }
    return c;
  }

  SumArm arm() {
    if (accept(Tok::Backtick)) return {ctor("`")};
    ArgShape s = shape();
    auto* ext = std::get_if<External>(&s.v);
    if (ext == nullptr) fail({Tok::Backtick, Tok::Ident});
    return {Include{ext->name, ext->args}};
  }

  ArgShape shape() {
    ArgShape s = atom();
    while (peek().kind == Tok::Ident) {
      std::string name = toks_[pos_++].text;
      expected_.clear();
      s = external(std::move(name), {std::move(s)});
    }
    expected_.insert(Tok::Ident);
    return s;
  }

  ArgShape atom() {
    if (accept(Tok::Quote)) return param(expect(Tok::Ident).text);
    if (peek().kind == Tok::Ident) return external(toks_[pos_++].text);
    expected_.insert(Tok::Ident);
    expect(Tok::LParen);
    std::vector<ArgShape> items{shape()};
    if (accept(Tok::Comma)) {
      items.push_back(shape());
      while (accept(Tok::Comma)) items.push_back(shape());
      expect(Tok::RParen);
      // A parenthesised argument list must be applied to a type name.
      std::string name = expect(Tok::Ident).text;
      return external(std::move(name), std::move(items));
    }
    while (accept(Tok::Star)) items.push_back(shape());
    expect(Tok::RParen);
    if (items.size() == 1) return std::move(items.front());
    return tuple(std::move(items));
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::set<Tok> expected_;
};


// Rewrites applications of the declaring type's own name into SelfRef.
void mark_self(ArgShape& s, const std::string& self) {
  if (auto* e = std::get_if<External>(&s.v)) {
    for (auto& a : e->args) mark_self(a, self);
    if (e->name == self) s = self_ref(std::move(e->args));
  } else if (auto* t = std::get_if<Tuple>(&s.v)) {
    for (auto& a : t->items) mark_self(a, self);
  }
}

void mark_self(TypeDecl& d) {
  auto fix_args = [&](std::vector<ArgShape>& args) {
    for (auto& a : args) mark_self(a, d.name);
  };
  if (auto* v = std::get_if<Variants>(&d.body)) {
    for (auto& c : v->ctors) fix_args(c.args);
  } else {
    for (auto& arm : std::get<OpenSum>(d.body).arms) {
      if (auto* c = std::get_if<CtorDecl>(&arm.v))
        fix_args(c->args);
      else
        fix_args(std::get<Include>(arm.v).args);
    }
  }
}

// ---------------------------------------------------------------------------
// Validation

std::string quoted(const std::string& s) { return "`" + s + "`"; }

bool is_upper_ident(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front())) &&
         std::all_of(s.begin(), s.end(), ident_char);
}

bool same_params(const std::vector<ArgShape>& args,
                 const std::vector<std::string>& params) {
  if (args.size() != params.size()) return false;
  for (size_t i = 0; i < args.size(); ++i) {
    const auto* p = std::get_if<ParamRef>(&args[i].v);
    if (p == nullptr || p->name != params[i]) return false;
  }
  return true;
}

class Validator {
 public:
  Validator(const TypeDecl& d, const DeclEnv& env) : d_(d), env_(env) {}

  void run() {
    std::set<std::string> seen;
    for (const auto& p : d_.params)
      if (!seen.insert(p).second)
        throw ValidationError(ValidationKind::DuplicateParam, p,
                              "duplicate type parameter '" + p + " in " +
                                  quoted(d_.name));
    if (const auto* v = std::get_if<Variants>(&d_.body)) {
      if (v->ctors.empty())
        throw ValidationError(ValidationKind::EmptyVariant, d_.name,
                              "type " + quoted(d_.name) +
                                  " has no constructors");
      bool tags = v->ctors.front().is_tag();
      for (const auto& c : v->ctors) ctor(c, tags);
    } else {
      for (const auto& arm : std::get<OpenSum>(d_.body).arms) {
        if (const auto* c = std::get_if<CtorDecl>(&arm.v))
          ctor(*c, /*tag=*/true);
        else
          include(std::get<Include>(arm.v));
      }
      check_cycles(d_.name, {});
      // Surfaces conflicting constructors across arms.
      resolve_open_sum(d_, env_);
    }
  }

 private:
  void ctor(const CtorDecl& c, bool tag) {
    std::string_view bare = c.name;
    if (tag) {
      if (bare.empty() || bare.front() != '`')
        throw ValidationError(ValidationKind::BadCtorName, c.name,
                              "constructor " + c.name +
                                  " must be a tag like `" + c.name);
      bare.remove_prefix(1);
    }
    if (!is_upper_ident(bare))
      throw ValidationError(ValidationKind::BadCtorName, c.name,
                            "constructor name " + c.name +
                                " must start with an uppercase letter");
    if (!ctor_names_.insert(c.name).second)
      throw ValidationError(ValidationKind::DuplicateCtor, c.name,
                            "duplicate constructor " + c.name + " in " +
                                quoted(d_.name));
    for (const auto& a : c.args) shape(a);
  }

  void include(const Include& inc) {
    auto it = env_.find(inc.name);
    if (it == env_.end())
      throw ValidationError(ValidationKind::UnknownInclude, inc.name,
                            "unknown include " + quoted(inc.name) + " in " +
                                quoted(d_.name));
    const TypeDecl& target = it->second;
    if (!target.is_open_sum() && !target.is_structural())
      throw ValidationError(ValidationKind::NotAnOpenSum, inc.name,
                            quoted(inc.name) +
                                " is not an open sum and cannot be included");
    if (target.params.size() != inc.args.size())
      throw ValidationError(ValidationKind::IncludeArity, inc.name,
                            quoted(inc.name) + " expects " +
                                std::to_string(target.params.size()) +
                                " type arguments");
    for (const auto& a : inc.args) shape(a);
  }

  void shape(const ArgShape& s) {
    std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, ParamRef>) {
            if (std::find(d_.params.begin(), d_.params.end(), v.name) ==
                d_.params.end())
              throw ValidationError(ValidationKind::UnboundTypeVar, v.name,
                                    "type variable '" + v.name +
                                        " is not a parameter of " +
                                        quoted(d_.name));
          } else if constexpr (std::is_same_v<V, SelfRef>) {
            for (const auto& a : v.args) shape(a);
            if (!same_params(v.args, d_.params))
              throw ValidationError(
                  ValidationKind::IrregularSelfRef, d_.name,
                  "recursive occurrence of " + quoted(d_.name) +
                      " must re-bind exactly its own parameters");
          } else if constexpr (std::is_same_v<V, External>) {
            for (const auto& a : v.args) shape(a);
            if (std::find(d_.cluster.begin(), d_.cluster.end(), v.name) !=
                d_.cluster.end()) {
              auto it = env_.find(v.name);
              if (!same_params(v.args, d_.params) ||
                  (it != env_.end() && it->second.params != d_.params))
                throw ValidationError(
                    ValidationKind::IrregularCoRef, v.name,
                    "co-recursive occurrence of " + quoted(v.name) +
                        " must bind the parameters shared by its group");
            }
          } else {
            for (const auto& a : v.items) shape(a);
          }
        },
        s.v);
  }

  void check_cycles(const std::string& name, std::vector<std::string> stack) {
    if (std::find(stack.begin(), stack.end(), name) != stack.end())
      throw ValidationError(ValidationKind::IncludeCycle, name,
                            "include cycle through " + quoted(name));
    stack.push_back(name);
    const TypeDecl* d = name == d_.name ? &d_ : nullptr;
    if (d == nullptr) {
      auto it = env_.find(name);
      if (it == env_.end()) return;
      d = &it->second;
    }
    if (const auto* sum = std::get_if<OpenSum>(&d->body))
      for (const auto& arm : sum->arms)
        if (const auto* inc = std::get_if<Include>(&arm.v))
          check_cycles(inc->name, stack);
  }

  const TypeDecl& d_;
  const DeclEnv& env_;
  std::set<std::string> ctor_names_;
};

ArgShape substitute(const ArgShape& s, const TypeDecl& owner,
                    const std::map<std::string, ArgShape>& binding) {
  return std::visit(
      [&](const auto& v) -> ArgShape {
        using V = std::decay_t<decltype(v)>;
        auto all = [&](const std::vector<ArgShape>& xs) {
          std::vector<ArgShape> out;
          for (const auto& x : xs) out.push_back(substitute(x, owner, binding));
          return out;
        };
        if constexpr (std::is_same_v<V, ParamRef>) {
          auto it = binding.find(v.name);
          return it == binding.end() ? ArgShape{v} : it->second;
        } else if constexpr (std::is_same_v<V, SelfRef>) {
          // Once included elsewhere, a self-reference names its owner.
          return external(owner.name, all(v.args));
        } else if constexpr (std::is_same_v<V, External>) {
          return external(v.name, all(v.args));
        } else {
          return tuple(all(v.items));
        }
      },
      s.v);
}

TypeDecl resolve(const TypeDecl& decl, const DeclEnv& env,
                 std::vector<std::string>& stack) {
  if (!decl.is_open_sum()) return decl;
  if (std::find(stack.begin(), stack.end(), decl.name) != stack.end())
    throw ValidationError(ValidationKind::IncludeCycle, decl.name,
                          "include cycle through " + quoted(decl.name));
  stack.push_back(decl.name);

  std::vector<CtorDecl> out;
  auto add = [&](CtorDecl c) {
    for (const auto& have : out) {
      if (have.name != c.name) continue;
      if (have.args == c.args) return;
      throw ValidationError(ValidationKind::ConflictingCtor, c.name,
                            "constructor " + c.name + " is defined with " +
                                "different arguments by two arms of " +
                                quoted(decl.name));
    }
    out.push_back(std::move(c));
  };

  std::vector<ArgShape> own_params;
  for (const auto& p : decl.params) own_params.push_back(param(p));

  for (const auto& arm : std::get<OpenSum>(decl.body).arms) {
    if (const auto* c = std::get_if<CtorDecl>(&arm.v)) {
      CtorDecl copy = *c;
      if (!copy.origin) copy.origin = Origin{decl.name, own_params};
      add(std::move(copy));
      continue;
    }
    const auto& inc = std::get<Include>(arm.v);
    auto it = env.find(inc.name);
    if (it == env.end())
      throw ValidationError(ValidationKind::UnknownInclude, inc.name,
                            "unknown include " + quoted(inc.name) + " in " +
                                quoted(decl.name));
    const TypeDecl& target_decl = it->second;
    if (!target_decl.is_open_sum() && !target_decl.is_structural())
      throw ValidationError(ValidationKind::NotAnOpenSum, inc.name,
                            quoted(inc.name) +
                                " is not an open sum and cannot be included");
    if (target_decl.params.size() != inc.args.size())
      throw ValidationError(ValidationKind::IncludeArity, inc.name,
                            quoted(inc.name) + " expects " +
                                std::to_string(target_decl.params.size()) +
                                " type arguments");
    TypeDecl target = resolve(target_decl, env, stack);
    std::map<std::string, ArgShape> binding;
    for (size_t i = 0; i < target.params.size(); ++i)
      binding.emplace(target.params[i], inc.args[i]);
    for (const auto& c : target.ctors()) {
      CtorDecl copy;
      copy.name = c.name;
      for (const auto& a : c.args)
        copy.args.push_back(substitute(a, target, binding));
      Origin origin;
      if (c.origin) {
        origin = *c.origin;
      } else {
        origin.decl = target.name;
        for (const auto& p : target.params) origin.args.push_back(param(p));
      }
      for (auto& a : origin.args) a = substitute(a, target, binding);
      copy.origin = std::move(origin);
      add(std::move(copy));
    }
  }
  stack.pop_back();

  TypeDecl flat;
  flat.name = decl.name;
  flat.params = decl.params;
  flat.body = Variants{std::move(out)};
  flat.cluster = decl.cluster;
  return flat;
}

}  // namespace

void validate(const TypeDecl& decl, const DeclEnv& env) {
  Validator(decl, env).run();
}

TypeDecl resolve_open_sum(const TypeDecl& decl, const DeclEnv& env) {
  std::vector<std::string> stack;
  return resolve(decl, env, stack);
}

DeclEnv make_env(const std::vector<TypeDecl>& decls) {
  DeclEnv env;
  for (const auto& d : decls) env.insert_or_assign(d.name, d);
  return env;
}

std::vector<TypeDecl> parse_type_decls(std::string_view source,
                                       const DeclEnv& env) {
  auto groups = Parser(lex(source)).groups();
  std::vector<TypeDecl> decls;
  std::set<std::string> names;
  for (auto& group : groups) {
    std::vector<std::string> members;
    for (const auto& d : group) members.push_back(d.name);
    for (auto& d : group) {
      for (const auto& m : members)
        if (m != d.name) d.cluster.push_back(m);
      mark_self(d);
      if (!names.insert(d.name).second)
        throw ValidationError(ValidationKind::DuplicateDecl, d.name,
                              "type " + quoted(d.name) + " declared twice");
      decls.push_back(std::move(d));
    }
  }
  DeclEnv scope = env;
  for (const auto& d : decls) scope.insert_or_assign(d.name, d);
  for (const auto& d : decls) validate(d, scope);
  return decls;
}

TypeDecl parse_type_decl(std::string_view source, const DeclEnv& env) {
  auto decls = parse_type_decls(source, env);
  if (decls.size() != 1)
    throw ParseError(SourcePos{}, std::to_string(decls.size()) + " declarations",
                     {"exactly one declaration"});
  return std::move(decls.front());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string print_shape(const ArgShape& s, const std::string& self);

std::string print_app(const std::string& name, const std::vector<ArgShape>& args,
                      const std::string& self) {
  if (args.empty()) return name;
  if (args.size() == 1) return print_shape(args.front(), self) + " " + name;
  std::vector<std::string> parts;
  for (const auto& a : args) parts.push_back(print_shape(a, self));
  return "(" + join(parts, ", ") + ") " + name;
}

std::string print_shape(const ArgShape& s, const std::string& self) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, ParamRef>) {
          return "'" + v.name;
        } else if constexpr (std::is_same_v<V, SelfRef>) {
          return print_app(self, v.args, self);
        } else if constexpr (std::is_same_v<V, External>) {
          return print_app(v.name, v.args, self);
        } else {
          std::vector<std::string> parts;
          for (const auto& a : v.items) parts.push_back(print_shape(a, self));
          return "(" + join(parts, " * ") + ")";
        }
      },
      s.v);
}

std::string print_ctor(const CtorDecl& c, const std::string& self) {
  if (c.args.empty()) return c.name;
  std::vector<std::string> parts;
  for (const auto& a : c.args) parts.push_back(print_shape(a, self));
  return c.name + " of " + join(parts, " * ");
}

std::string print_decl_body(const TypeDecl& d) {
  std::string head;
  if (d.params.size() == 1) {
    head = "'" + d.params.front() + " ";
  } else if (d.params.size() > 1) {
    std::vector<std::string> ps;
    for (const auto& p : d.params) ps.push_back("'" + p);
    head = "(" + join(ps, ", ") + ") ";
  }
  std::string out = head + d.name + " = ";
  if (const auto* v = std::get_if<Variants>(&d.body)) {
    std::vector<std::string> parts;
    for (const auto& c : v->ctors) parts.push_back(print_ctor(c, d.name));
    bool tags = !v->ctors.empty() && v->ctors.front().is_tag();
    out += tags ? "[ " + join(parts, " | ") + " ]" : join(parts, " | ");
  } else {
    std::vector<std::string> parts;
    for (const auto& arm : std::get<OpenSum>(d.body).arms) {
      if (const auto* c = std::get_if<CtorDecl>(&arm.v)) {
        parts.push_back(print_ctor(*c, d.name));
      } else {
        const auto& inc = std::get<Include>(arm.v);
        parts.push_back(print_app(inc.name, inc.args, d.name));
      }
    }
    out += "[ " + join(parts, " | ") + " ]";
  }
  return out;
}

}  // namespace

std::string pretty_print(const ArgShape& shape) {
  return print_shape(shape, "");
}

std::string pretty_print(const TypeDecl& decl) {
  return "type " + print_decl_body(decl);
}

std::string pretty_print(const std::vector<TypeDecl>& decls) {
  std::string out;
  for (size_t i = 0; i < decls.size(); ++i) {
    bool joined = i > 0 && std::find(decls[i].cluster.begin(),
                                     decls[i].cluster.end(),
                                     decls[i - 1].name) !=
                               decls[i].cluster.end();
    if (i > 0) out += joined ? "\nand " : "\n\n";
    out += joined ? print_decl_body(decls[i]) : pretty_print(decls[i]);
  }
  if (!decls.empty()) out += "\n";
  return out;
}

}  // namespace gt::adt
