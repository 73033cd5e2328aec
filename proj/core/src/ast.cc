#include "flowgraph/ast.h"

namespace flowgraph {

std::string_view spelling(UnaryOp op) { return op == UnaryOp::kNeg ? "-" : "!"; }

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kRem: return "%";
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kRem: return 6;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 5;
    case BinaryOp::kLt:
    case BinaryOp::kGt:
    case BinaryOp::kLe:
    case BinaryOp::kGe: return 4;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 3;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kOr: return 1;
  }
  return 0;
}

ExprType type_of(const Expr& e) {
  return std::visit(Overloaded{
                        [](const IntLiteral&) { return ExprType::kInt; },
                        [](const VarRef&) { return ExprType::kInt; },
                        [](const Unary& u) {
                          return u.op == UnaryOp::kNot ? ExprType::kBool : ExprType::kInt;
                        },
                        [](const Binary& b) {
                          return precedence(b.op) >= 5 ? ExprType::kInt : ExprType::kBool;
                        },
                    },
                    e.node);
}

namespace {

int precedence_of(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return precedence(b->op);
  if (std::holds_alternative<Unary>(e.node)) return kUnaryPrecedence;
  return kAtomPrecedence;
}

void render_into(const Expr& e, std::string& out);

void render_operand(const Expr& e, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  render_into(e, out);
  if (parenthesize) out += ')';
}

void render_into(const Expr& e, std::string& out) {
  std::visit(Overloaded{
                 [&](const IntLiteral& lit) { out += std::to_string(lit.value); },
                 [&](const VarRef& v) { out += v.name; },
                 [&](const Unary& u) {
                   out += spelling(u.op);
                   render_operand(*u.operand, precedence_of(*u.operand) < kAtomPrecedence, out);
                 },
                 [&](const Binary& b) {
                   int p = precedence(b.op);
                   // All binary operators are left-associative.
                   render_operand(*b.lhs, precedence_of(*b.lhs) < p, out);
                   out += ' ';
                   out += spelling(b.op);
                   out += ' ';
                   render_operand(*b.rhs, precedence_of(*b.rhs) <= p, out);
                 },
             },
             e.node);
}

}  // namespace

std::string render_expr(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

}  // namespace flowgraph
