//===- interp.cc - Tracing interpreter ------------------------------------===//
#include "flowgraph/interp.h"

namespace flowgraph {

DivisionByZero::DivisionByZero(StatementId stmt, Trace partial)
    : RuntimeError("division by zero in statement " + std::to_string(stmt), std::move(partial)),
      stmt_(stmt) {}

StepLimitExceeded::StepLimitExceeded(std::uint64_t limit, Trace partial)
    : RuntimeError("step limit of " + std::to_string(limit) + " exceeded", std::move(partial)),
      limit_(limit) {}

namespace {

std::int32_t wrap(std::int64_t v) {
  return static_cast<std::int32_t>(static_cast<std::uint32_t>(v));
}

std::int32_t arith(BinaryOp op, std::int32_t a, std::int32_t b) {
  std::int64_t x = a, y = b;
  switch (op) {
    case BinaryOp::kAdd: return wrap(x + y);
    case BinaryOp::kSub: return wrap(x - y);
    case BinaryOp::kMul: return wrap(x * y);
    // int64 quotient of INT_MIN / -1 is 2^31, which wraps back to INT_MIN.
    case BinaryOp::kDiv:
      if (y == 0) throw std::domain_error("division by zero");
      return wrap(x / y);
    case BinaryOp::kRem:
      if (y == 0) throw std::domain_error("division by zero");
      return wrap(x % y);
    default: break;
  }
  throw std::logic_error("not an arithmetic operator");
}

}  // namespace

std::int32_t evaluate_int(const Expr& e, const Env& env) {
  return std::visit(Overloaded{
                        [](const IntLiteral& lit) { return wrap(lit.value); },
                        [&](const VarRef& v) { return env.at(v.name); },
                        [&](const Unary& u) {
                          return wrap(-static_cast<std::int64_t>(evaluate_int(*u.operand, env)));
                        },
                        [&](const Binary& b) {
                          return arith(b.op, evaluate_int(*b.lhs, env), evaluate_int(*b.rhs, env));
                        },
                    },
                    e.node);
}

bool evaluate_bool(const Expr& e, const Env& env) {
  if (const auto* u = std::get_if<Unary>(&e.node)) return !evaluate_bool(*u->operand, env);
  const auto& b = std::get<Binary>(e.node);
  switch (b.op) {
    case BinaryOp::kAnd: return evaluate_bool(*b.lhs, env) && evaluate_bool(*b.rhs, env);
    case BinaryOp::kOr: return evaluate_bool(*b.lhs, env) || evaluate_bool(*b.rhs, env);
    case BinaryOp::kEq:
    case BinaryOp::kNe: {
      bool equal = type_of(*b.lhs) == ExprType::kBool
                       ? evaluate_bool(*b.lhs, env) == evaluate_bool(*b.rhs, env)
                       : evaluate_int(*b.lhs, env) == evaluate_int(*b.rhs, env);
      return b.op == BinaryOp::kEq ? equal : !equal;
    }
    default: break;
  }
  std::int32_t x = evaluate_int(*b.lhs, env);
  std::int32_t y = evaluate_int(*b.rhs, env);
  switch (b.op) {
    case BinaryOp::kLt: return x < y;
    case BinaryOp::kGt: return x > y;
    case BinaryOp::kLe: return x <= y;
    case BinaryOp::kGe: return x >= y;
    default: break;
  }
  throw std::logic_error("not a condition");
}

namespace {

class Interpreter {
 public:
  Interpreter(std::uint64_t step_limit) : limit_(step_limit) {}

  Trace run(const Block& body) {
    exec(body);
    return std::move(trace_);
  }

 private:
  void exec(const Block& b) {
    for (const Stmt& s : b.stmts) exec(s);
  }

  void step(StatementId id) {
    if (trace_.steps == limit_) throw StepLimitExceeded(limit_, std::move(trace_));
    ++trace_.steps;
    trace_.node_ids.push_back(id);
  }

  std::int32_t eval(const Expr& e, StatementId id) {
    try {
      return evaluate_int(e, trace_.final_env);
    } catch (const std::domain_error&) {
      throw DivisionByZero(id, std::move(trace_));
    }
  }

  bool decide(const Expr& cond, StatementId id) {
    bool outcome;
    try {
      outcome = evaluate_bool(cond, trace_.final_env);
    } catch (const std::domain_error&) {
      throw DivisionByZero(id, std::move(trace_));
    }
    trace_.outcomes.push_back({id, outcome, ++visits_[id]});
    return outcome;
  }

  void exec(const Stmt& s) {
    if (const auto* b = std::get_if<Block>(&s.node)) {
      exec(*b);
      return;
    }
    StatementId id = *s.id;
    step(id);
    std::visit(Overloaded{
                   [&](const VarDecl& d) { trace_.final_env[d.name] = eval(d.init, id); },
                   [&](const Assign& a) { trace_.final_env[a.name] = eval(a.value, id); },
                   [&](const Print& p) { trace_.output.push_back(eval(p.value, id)); },
                   [&](const If& i) {
                     if (decide(i.cond, id)) {
                       exec(*i.then_branch);
                     } else if (i.else_branch) {
                       exec(**i.else_branch);
                     }
                   },
                   [&](const While& w) {
                     while (decide(w.cond, id)) {
                       exec(*w.body);
                       step(id);
                     }
                   },
                   [](const Block&) {},
               },
               s.node);
  }

  std::uint64_t limit_;
  Trace trace_;
  std::map<StatementId, std::uint32_t> visits_;
};

}  // namespace

Trace execute(const NumberedProgram& program, std::uint64_t step_limit) {
  return Interpreter(std::max<std::uint64_t>(step_limit, 1)).run(program.ast.main_body);
}

std::string render_dynamic_report(const NumberedProgram& program, const Trace& t) {
  std::string out;
  for (const Decision& d : t.outcomes) out += render_decision(program, d) + "\n";
  out += "Execution Path:" + render_id_sequence(t.node_ids) + "\n";
  return out;
}

}  // namespace flowgraph
