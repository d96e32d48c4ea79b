#include "gt/expr.hpp"

#include <algorithm>
#include <cctype>

#include "gt/gen/show_expr_gen.hpp"

namespace gt::expr {

Expr v(std::string name) { return Expr{gen::expr<Expr>{gen::Var{std::move(name)}}}; }
Expr add(Expr a, Expr b) {
  return Expr{gen::expr<Expr>{gen::Add<Expr>{std::move(a), std::move(b)}}};
}
Expr mul(Expr a, Expr b) {
  return Expr{gen::expr<Expr>{gen::Mul<Expr>{std::move(a), std::move(b)}}};
}

using Composed = gen::expr_t<Expr, std::int64_t, IntEnv, std::int64_t>;

Transformer expr_eval() {
  return extend_all(
      Composed::abstract(),
      {{"var_eval", var_eval<std::int64_t>::methods<Composed>()},
       {"arith_eval", arith_eval<IntEnv>::methods<Composed>()}});
}

std::int64_t eval(const IntEnv& env, const Expr& e) {
  static const Transformer tr = expr_eval();
  static const std::function<std::int64_t(const IntEnv&, const Expr&)> self =
      [](const IntEnv& s, const Expr& x) { return eval(s, x); };
  return gen::expr_gcata<Expr, std::int64_t, IntEnv, std::int64_t>(self, tr, env,
                                                                   *e.node);
}

IntEnv env_from(std::map<std::string, std::int64_t, std::less<>> bindings) {
  return [bindings = std::move(bindings)](const std::string& name) {
    if (auto it = bindings.find(name); it != bindings.end()) return it->second;
    const bool numeral =
        !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) != 0;
        });
    if (!numeral) throw UnboundVariable(name);
    try {
      return static_cast<std::int64_t>(std::stoll(name));
    } catch (const std::out_of_range&) {
      throw UnboundVariable(name);
    }
  };
}

std::string show(const Expr& e) {
  static const Transformer tr = gen::show_expr<Expr>::make();
  static const std::function<std::string(const unit&, const Expr&)> self =
      [](const unit&, const Expr& x) { return show(x); };
  return gen::expr_gcata<Expr, std::string, unit, std::string>(self, tr, {},
                                                               *e.node);
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip_ws();
    if (pos_ != text_.size())
      throw ExprParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr e = product();
    while (eat('+')) e = add(std::move(e), product());
    return e;
  }

  Expr product() {
    Expr e = atom();
    while (eat('*')) e = mul(std::move(e), atom());
    return e;
  }

  Expr atom() {
    if (eat('(')) {
      Expr e = sum();
      if (!eat(')')) throw ExprParseError(pos_, "expected ')'");
      return e;
    }
    skip_ws();
    const size_t start = pos_;
    auto is = [&](auto pred) {
      return pos_ < text_.size() && pred(static_cast<unsigned char>(text_[pos_]));
    };
    if (is([](unsigned char c) { return std::isdigit(c) != 0; })) {
      while (is([](unsigned char c) { return std::isdigit(c) != 0; })) ++pos_;
    } else if (is([](unsigned char c) { return std::isalpha(c) != 0 || c == '_'; })) {
      while (is([](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_' || c == '\'';
      }))
        ++pos_;
    } else {
      throw ExprParseError(pos_, pos_ < text_.size()
                                     ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                     : "unexpected end of input");
    }
    return v(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace gt::expr
