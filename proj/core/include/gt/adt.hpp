// Type declarations: the input to code generation.
//
// The concrete syntax is a small OCaml-flavoured subset:
//
//   decls  := decl { "and" decl }
//   decl   := "type" params? IDENT "=" body
//   params := "'" IDENT | "(" "'" IDENT { "," "'" IDENT } ")"
//   body   := ctor { "|" ctor } | "[" arm { "|" arm } "]"
//   ctor   := UIDENT [ "of" shape { "*" shape } ]
//   arm    := "`" UIDENT [ "of" shape { "*" shape } ] | tyexpr
//   shape  := atom { IDENT }                      (postfix application)
//   atom   := "'" IDENT | IDENT
//           | "(" shape { "*" shape } ")"         (tuple, or grouping)
//           | "(" shape "," shape { "," shape } ")" IDENT
//
// A file holds any number of declaration groups; `(* ... *)` comments are
// ignored.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gt::adt {

struct ArgShape;

struct ParamRef {
  std::string name;
  bool operator==(const ParamRef&) const = default;
};

/// Recursive occurrence of the declaring type. Bindings must be exactly the
/// declaration's own parameters, in order (regularity).
struct SelfRef {
  std::vector<ArgShape> args;
  bool operator==(const SelfRef&) const = default;
};

struct External {
  std::string name;
  std::vector<ArgShape> args;
  bool operator==(const External&) const = default;
};

/// Parenthesised product; always at least two items. Named-field records are
/// modelled as tuples too.
struct Tuple {
  std::vector<ArgShape> items;
  bool operator==(const Tuple&) const = default;
};

struct ArgShape {
  std::variant<ParamRef, SelfRef, External, Tuple> v;
  bool operator==(const ArgShape&) const = default;
};

ArgShape param(std::string name);
ArgShape self_ref(std::vector<ArgShape> args);
ArgShape external(std::string name, std::vector<ArgShape> args = {});
ArgShape tuple(std::vector<ArgShape> items);

/// Where an open-sum constructor was declared, and how that declaration's
/// parameters are bound from the point of view of the current declaration.
struct Origin {
  std::string decl;
  std::vector<ArgShape> args;
  bool operator==(const Origin&) const = default;
};

struct CtorDecl {
  std::string name;  // "`Tag" for open-sum arms
  std::vector<ArgShape> args;
  std::optional<Origin> origin;
  bool operator==(const CtorDecl&) const = default;

  bool is_tag() const { return !name.empty() && name.front() == '`'; }
  /// Name without the backtick marker.
  std::string bare_name() const { return is_tag() ? name.substr(1) : name; }
};

struct Include {
  std::string name;
  std::vector<ArgShape> args;
  bool operator==(const Include&) const = default;
};

struct SumArm {
  std::variant<CtorDecl, Include> v;
  bool operator==(const SumArm&) const = default;
};

struct Variants {
  std::vector<CtorDecl> ctors;
  bool operator==(const Variants&) const = default;
};

struct OpenSum {
  std::vector<SumArm> arms;
  bool operator==(const OpenSum&) const = default;
};

struct TypeDecl {
  std::string name;
  std::vector<std::string> params;
  std::variant<Variants, OpenSum> body;
  /// Other members of an `and`-joined group, in declaration order.
  std::vector<std::string> cluster;
  bool operator==(const TypeDecl&) const = default;

  bool is_open_sum() const { return std::holds_alternative<OpenSum>(body); }
  /// Constructors of a Variants body; throws for unresolved open sums.
  const std::vector<CtorDecl>& ctors() const;
  /// A flattened open sum: a Variants body whose constructors are tags.
  bool is_structural() const;
};

using DeclEnv = std::map<std::string, TypeDecl, std::less<>>;

struct SourcePos {
  int line = 1;
  int column = 1;
  bool operator==(const SourcePos&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, std::string found,
             std::vector<std::string> expected);
  SourcePos pos() const { return pos_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string found_;
  std::vector<std::string> expected_;
};

enum class ValidationKind {
  DuplicateParam,
  UnboundTypeVar,
  DuplicateCtor,
  BadCtorName,
  IrregularSelfRef,
  IrregularCoRef,
  UnknownInclude,
  NotAnOpenSum,
  IncludeArity,
  IncludeCycle,
  ConflictingCtor,
  DuplicateDecl,
  EmptyVariant,
  UnresolvedOpenSum,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, std::string subject,
                  const std::string& message);
  ValidationKind kind() const { return kind_; }
  /// The offending identifier.
  const std::string& subject() const { return subject_; }

 private:
  ValidationKind kind_;
  std::string subject_;
};

/// Parses every declaration group in `source` and validates each against the
/// others and `env` (used to resolve open-sum includes).
std::vector<TypeDecl> parse_type_decls(std::string_view source,
                                       const DeclEnv& env = {});

/// Parses exactly one declaration.
TypeDecl parse_type_decl(std::string_view source, const DeclEnv& env = {});

/// Checks the declaration invariants; includes are looked up in `env`.
void validate(const TypeDecl& decl, const DeclEnv& env);

/// Flattens an open sum into a Variants body of tags. Already-flat
/// declarations are returned unchanged.
TypeDecl resolve_open_sum(const TypeDecl& decl, const DeclEnv& env);

std::string pretty_print(const ArgShape& shape);
std::string pretty_print(const TypeDecl& decl);
/// Prints declaration groups, joining cluster members with `and`.
std::string pretty_print(const std::vector<TypeDecl>& decls);

DeclEnv make_env(const std::vector<TypeDecl>& decls);

}  // namespace gt::adt
