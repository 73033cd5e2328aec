//===- ast.h - Syntax tree for the MiniJava-CF subset -----------*- C++ -*-===//
//
// One class, one main method, int variables only. Nodes are plain values;
// recursive children live in Box<T>, which copies deeply and compares by
// value. Equality ignores source locations so that a re-parsed rendering
// compares equal to the original tree.
//
//===----------------------------------------------------------------------===//
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace flowgraph {

using StatementId = std::uint32_t;

struct SourceLoc {
  std::uint32_t line = 0;
  std::uint32_t column = 0;
};

/// Owning pointer with value semantics.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

enum class UnaryOp { kNeg, kNot };

enum class BinaryOp {
  kMul, kDiv, kRem,
  kAdd, kSub,
  kLt, kGt, kLe, kGe,
  kEq, kNe,
  kAnd,
  kOr,
};

std::string_view spelling(UnaryOp op);
std::string_view spelling(BinaryOp op);

/// Binding strength; larger binds tighter. Unary operators sit above all
/// binary ones.
int precedence(BinaryOp op);
inline constexpr int kUnaryPrecedence = 7;
inline constexpr int kAtomPrecedence = 8;

struct Expr;

struct IntLiteral {
  // Literals up to 2^31 are accepted so that -2147483648 can be written.
  std::int64_t value = 0;
  friend bool operator==(const IntLiteral&, const IntLiteral&) = default;
};

struct VarRef {
  std::string name;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};

struct Unary {
  UnaryOp op;
  Box<Expr> operand;
  friend bool operator==(const Unary&, const Unary&) = default;
};

struct Binary {
  BinaryOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

struct Expr {
  std::variant<IntLiteral, VarRef, Unary, Binary> node;
  SourceLoc loc;

  friend bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
};

enum class ExprType { kInt, kBool };

/// Static type of a well-formed expression, derived from its top operator.
ExprType type_of(const Expr& e);

/// Canonical text: binary operators spaced, minimal parentheses.
std::string render_expr(const Expr& e);

struct Stmt;

struct VarDecl {
  std::string name;
  Expr init;
  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

struct Assign {
  std::string name;
  Expr value;
  friend bool operator==(const Assign&, const Assign&) = default;
};

struct If {
  Expr cond;
  Box<Stmt> then_branch;
  std::optional<Box<Stmt>> else_branch;
  friend bool operator==(const If&, const If&) = default;
};

struct While {
  Expr cond;
  Box<Stmt> body;
  friend bool operator==(const While&, const While&) = default;
};

struct Print {
  Expr value;
  friend bool operator==(const Print&, const Print&) = default;
};

struct Block {
  std::vector<Stmt> stmts;
  friend bool operator==(const Block&, const Block&) = default;
};

struct Stmt {
  std::variant<VarDecl, Assign, If, While, Print, Block> node;
  SourceLoc loc;
  // Assigned by number_statements; empty for blocks and before numbering.
  std::optional<StatementId> id;

  friend bool operator==(const Stmt& a, const Stmt& b) {
    return a.node == b.node && a.id == b.id;
  }
};

struct Ast {
  std::string class_name;
  std::string args_name;
  Block main_body;

  friend bool operator==(const Ast&, const Ast&) = default;
};

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace flowgraph
