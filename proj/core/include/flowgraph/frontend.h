//===- frontend.h - Lexer, parser and statement numbering -------*- C++ -*-===//
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flowgraph/ast.h"

namespace flowgraph {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kIntegerLiteral,
  kOperator,
  kPunctuation,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::uint32_t line = 0;    // 1-based
  std::uint32_t column = 0;  // 1-based, in bytes

  friend bool operator==(const Token&, const Token&) = default;
};

/// Base of every error raised while turning source text into a program.
class FrontendError : public std::runtime_error {
 public:
  FrontendError(const std::string& what, SourceLoc loc)
      : std::runtime_error(what), loc_(loc) {}
  SourceLoc location() const { return loc_; }

 private:
  SourceLoc loc_;
};

class LexError : public FrontendError {
 public:
  LexError(SourceLoc loc, char offending);
  char offending() const { return offending_; }

 private:
  char offending_;
};

class ParseError : public FrontendError {
 public:
  ParseError(SourceLoc loc, std::string found, std::vector<std::string> expected);
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string found_;
  std::vector<std::string> expected_;
};

/// Well-formed syntax that violates a static rule of the language.
class StaticError : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

class UndeclaredVariable : public StaticError {
 public:
  UndeclaredVariable(SourceLoc loc, const std::string& name);
};

class DuplicateDeclaration : public StaticError {
 public:
  DuplicateDeclaration(SourceLoc loc, const std::string& name);
};

class MissingInitializer : public StaticError {
 public:
  MissingInitializer(SourceLoc loc, const std::string& name);
};

/// int used where a condition is required, or the reverse.
class TypeMismatch : public StaticError {
 public:
  TypeMismatch(SourceLoc loc, const std::string& detail);
};

/// Splits source into tokens by maximal munch. Whitespace, `//` line
/// comments and `/* */` block comments are dropped.
std::vector<Token> tokenize(std::string_view source);

/// Recursive-descent parse of a whole compilation unit, including the
/// scope and type checks. Stops at the first error.
Ast parse(const std::vector<Token>& tokens);

enum class StatementKind { kVarDecl, kAssign, kPrint, kIf, kWhile };

struct StatementInfo {
  StatementKind kind;
  // Canonical one-line rendering, e.g. "z = z + y;" or "if (x > y)".
  std::string text;
  // Condition text for If/While headers ("x > y"), empty otherwise.
  std::string condition;
  SourceLoc loc;

  friend bool operator==(const StatementInfo& a, const StatementInfo& b) {
    return a.kind == b.kind && a.text == b.text && a.condition == b.condition;
  }
};

/// An Ast whose numberable statements carry dense pre-order IDs 0..N-1.
struct NumberedProgram {
  Ast ast;
  std::vector<StatementInfo> statements;  // indexed by StatementId

  std::size_t size() const { return statements.size(); }
  const StatementInfo& info(StatementId id) const { return statements.at(id); }
  const std::string& text_of(StatementId id) const { return info(id).text; }
  const std::string& condition_of(StatementId id) const { return info(id).condition; }
  bool is_branch(StatementId id) const {
    auto k = info(id).kind;
    return k == StatementKind::kIf || k == StatementKind::kWhile;
  }

  friend bool operator==(const NumberedProgram&, const NumberedProgram&) = default;
};

NumberedProgram number_statements(Ast ast);

/// tokenize + parse + number_statements.
NumberedProgram load_program(std::string_view source);

/// Reassembles a full compilation unit from the per-statement renderings.
/// Re-parsing the result yields a NumberedProgram equal to the input.
std::string render_program(const NumberedProgram& program);

/// Indented tree dump with statement IDs, one node per line.
std::string dump_ast(const NumberedProgram& program);

}  // namespace flowgraph
