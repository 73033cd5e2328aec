//===- parser.cc - Recursive-descent parser with scope and type checks ----===//
//
// Precedence, tightest first: unary ! -, * / %, + -, relational, equality,
// &&, ||. Every binary level is left-associative. A dangling else binds to
// the nearest if.
//
// Variables are visible from their declaration to the end of the enclosing
// block (or of the if/while arm, for an unbraced declaration). Names must be
// unique across the whole method so that analyses can key on them.
//
//===----------------------------------------------------------------------===//
#include <set>

#include "flowgraph/frontend.h"

namespace flowgraph {

namespace {

std::string loc_prefix(SourceLoc loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": ";
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(SourceLoc loc, std::string found, std::vector<std::string> expected)
    : FrontendError(loc_prefix(loc) + "expected " + join_expected(expected) + ", found " + found,
                    loc),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

UndeclaredVariable::UndeclaredVariable(SourceLoc loc, const std::string& name)
    : StaticError(loc_prefix(loc) + "use of undeclared variable '" + name + "'", loc) {}

DuplicateDeclaration::DuplicateDeclaration(SourceLoc loc, const std::string& name)
    : StaticError(loc_prefix(loc) + "variable '" + name + "' is already declared", loc) {}

MissingInitializer::MissingInitializer(SourceLoc loc, const std::string& name)
    : StaticError(loc_prefix(loc) + "declaration of '" + name + "' has no initializer", loc) {}

TypeMismatch::TypeMismatch(SourceLoc loc, const std::string& detail)
    : StaticError(loc_prefix(loc) + detail, loc) {}

namespace {

constexpr std::int64_t kMaxLiteral = std::int64_t{1} << 31;

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  Ast program() {
    Ast ast;
    accept("public");
    expect("class");
    ast.class_name = expect_identifier();
    expect("{");
    expect("public");
    expect("static");
    expect("void");
    expect_word("main");
    expect("(");
    expect_word("String");
    expect("[");
    expect("]");
    ast.args_name = expect_identifier();
    expect(")");
    ast.main_body = block();
    expect("}");
    if (!at_end()) fail({"end of input"});
    return ast;
  }

 private:
  // --- token plumbing ---

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
  }

  SourceLoc here() const {
    if (const Token* t = peek()) return {t->line, t->column};
    if (toks_.empty()) return {1, 1};
    const Token& last = toks_.back();
    return {last.line, last.column + static_cast<std::uint32_t>(last.lexeme.size())};
  }

  bool check(std::string_view lexeme) const {
    const Token* t = peek();
    return t && t->kind != TokenKind::kIdentifier &&
           t->kind != TokenKind::kIntegerLiteral && t->lexeme == lexeme;
  }

  bool accept(std::string_view lexeme) {
    if (!check(lexeme)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token* t = peek();
    throw ParseError(here(), t ? "'" + t->lexeme + "'" : "end of input", std::move(expected));
  }

  void expect(std::string_view lexeme) {
    if (!accept(lexeme)) fail({"'" + std::string(lexeme) + "'"});
  }

  // Contextual words such as `main` and `String` lex as identifiers.
  void expect_word(std::string_view word) {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::kIdentifier || t->lexeme != word) {
      fail({"'" + std::string(word) + "'"});
    }
    ++pos_;
  }

  bool check_word(std::size_t ahead, std::string_view word) const {
    const Token* t = peek(ahead);
    return t && t->kind == TokenKind::kIdentifier && t->lexeme == word;
  }

  std::string expect_identifier() {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::kIdentifier) fail({"identifier"});
    ++pos_;
    return t->lexeme;
  }

  // --- scopes ---

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }

  bool visible(const std::string& name) const {
    for (const auto& scope : scopes_) {
      if (scope.count(name)) return true;
    }
    return false;
  }

  void require_visible(const std::string& name, SourceLoc loc) const {
    if (!visible(name)) throw UndeclaredVariable(loc, name);
  }

  static void require_type(const Expr& e, ExprType want, std::string_view context) {
    if (type_of(e) == want) return;
    std::string detail = std::string(context) + " must be " +
                         (want == ExprType::kInt ? "an int expression" : "a condition") +
                         ", found '" + render_expr(e) + "'";
    throw TypeMismatch(e.loc, detail);
  }

  // --- statements ---

  Block block() {
    expect("{");
    push_scope();
    Block b;
    while (!check("}")) {
      if (at_end()) fail({"statement", "'}'"});
      b.stmts.push_back(statement());
    }
    pop_scope();
    expect("}");
    return b;
  }

  // Arms of if/while get their own scope even when unbraced.
  Stmt arm() {
    push_scope();
    Stmt s = statement();
    pop_scope();
    return s;
  }

  Stmt statement() {
    SourceLoc loc = here();
    Stmt s{Block{}, loc, std::nullopt};
    if (check("{")) {
      s.node = block();
    } else if (check("int")) {
      s.node = var_decl();
    } else if (accept("if")) {
      expect("(");
      Expr cond = expression();
      require_type(cond, ExprType::kBool, "if condition");
      expect(")");
      If node{std::move(cond), arm(), std::nullopt};
      if (accept("else")) node.else_branch = arm();
      s.node = std::move(node);
    } else if (accept("while")) {
      expect("(");
      Expr cond = expression();
      require_type(cond, ExprType::kBool, "while condition");
      expect(")");
      s.node = While{std::move(cond), arm()};
    } else if (check_word(0, "System") && peek(1) && peek(1)->lexeme == ".") {
      s.node = print();
    } else if (peek() && peek()->kind == TokenKind::kIdentifier) {
      std::string name = expect_identifier();
      expect("=");
      require_visible(name, loc);
      Expr value = expression();
      require_type(value, ExprType::kInt, "assigned value");
      expect(";");
      s.node = Assign{std::move(name), std::move(value)};
    } else {
      fail({"statement"});
    }
    return s;
  }

  VarDecl var_decl() {
    expect("int");
    SourceLoc name_loc = here();
    std::string name = expect_identifier();
    if (check(";")) throw MissingInitializer(name_loc, name);
    expect("=");
    Expr init = expression();
    require_type(init, ExprType::kInt, "initializer");
    expect(";");
    // Declared after the initializer: `int x = x;` is a use of an undeclared x.
    if (!all_declared_.insert(name).second) throw DuplicateDeclaration(name_loc, name);
    scopes_.back().insert(name);
    return VarDecl{std::move(name), std::move(init)};
  }

  Print print() {
    expect_word("System");
    expect(".");
    expect_word("out");
    expect(".");
    expect_word("println");
    expect("(");
    Expr value = expression();
    require_type(value, ExprType::kInt, "println argument");
    expect(")");
    expect(";");
    return Print{std::move(value)};
  }

  // --- expressions ---

  struct OpEntry {
    std::string_view lexeme;
    BinaryOp op;
  };

  static std::vector<OpEntry> ops_at(int level) {
    switch (level) {
      case 1: return {{"||", BinaryOp::kOr}};
      case 2: return {{"&&", BinaryOp::kAnd}};
      case 3: return {{"==", BinaryOp::kEq}, {"!=", BinaryOp::kNe}};
      case 4:
        return {{"<", BinaryOp::kLt}, {">", BinaryOp::kGt}, {"<=", BinaryOp::kLe},
                {">=", BinaryOp::kGe}};
      case 5: return {{"+", BinaryOp::kAdd}, {"-", BinaryOp::kSub}};
      case 6: return {{"*", BinaryOp::kMul}, {"/", BinaryOp::kDiv}, {"%", BinaryOp::kRem}};
    }
    return {};
  }

  Expr expression() { return binary(1); }

  Expr binary(int level) {
    if (level > 6) return unary();
    Expr lhs = binary(level + 1);
    for (;;) {
      const OpEntry* match = nullptr;
      auto table = ops_at(level);
      for (const auto& entry : table) {
        if (check(entry.lexeme)) match = &entry;
      }
      if (!match) return lhs;
      SourceLoc loc = here();
      ++pos_;
      Expr rhs = binary(level + 1);
      check_operands(match->op, lhs, rhs, loc);
      SourceLoc lhs_loc = lhs.loc;
      lhs = Expr{Binary{match->op, std::move(lhs), std::move(rhs)}, lhs_loc};
    }
  }

  static void check_operands(BinaryOp op, const Expr& lhs, const Expr& rhs, SourceLoc loc) {
    std::string ctx = "operand of '" + std::string(spelling(op)) + "'";
    switch (op) {
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        require_type(lhs, ExprType::kBool, ctx);
        require_type(rhs, ExprType::kBool, ctx);
        return;
      case BinaryOp::kEq:
      case BinaryOp::kNe:
        if (type_of(lhs) != type_of(rhs)) {
          throw TypeMismatch(loc, "operands of '" + std::string(spelling(op)) +
                                      "' have different types");
        }
        return;
      default:
        require_type(lhs, ExprType::kInt, ctx);
        require_type(rhs, ExprType::kInt, ctx);
    }
  }

  Expr unary(bool negated = false) {
    SourceLoc loc = here();
    if (accept("-")) {
      Expr operand = unary(/*negated=*/true);
      require_type(operand, ExprType::kInt, "operand of unary '-'");
      return Expr{Unary{UnaryOp::kNeg, std::move(operand)}, loc};
    }
    if (accept("!")) {
      Expr operand = unary();
      require_type(operand, ExprType::kBool, "operand of '!'");
      return Expr{Unary{UnaryOp::kNot, std::move(operand)}, loc};
    }
    return primary(negated);
  }

  Expr primary(bool negated) {
    SourceLoc loc = here();
    const Token* t = peek();
    if (t && t->kind == TokenKind::kIntegerLiteral) {
      ++pos_;
      std::int64_t value = 0;
      for (char c : t->lexeme) {
        value = value * 10 + (c - '0');
        if (value > kMaxLiteral) break;
      }
      // 2^31 only as the operand of unary minus, as in Java.
      if (value > kMaxLiteral || (value == kMaxLiteral && !negated)) {
        throw ParseError(loc, "'" + t->lexeme + "'", {"integer literal in int range"});
      }
      return Expr{IntLiteral{value}, loc};
    }
    if (t && t->kind == TokenKind::kIdentifier) {
      ++pos_;
      require_visible(t->lexeme, loc);
      return Expr{VarRef{t->lexeme}, loc};
    }
    if (accept("(")) {
      Expr inner = expression();
      expect(")");
      inner.loc = loc;
      return inner;
    }
    fail({"expression"});
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::vector<std::set<std::string>> scopes_;
  std::set<std::string> all_declared_;
};

}  // namespace

Ast parse(const std::vector<Token>& tokens) { return Parser(tokens).program(); }

}  // namespace flowgraph
