//===- interp.h - Tracing tree-walking interpreter --------------*- C++ -*-===//
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowgraph/frontend.h"
#include "flowgraph/paths.h"

namespace flowgraph {

/// Variables whose declarations have executed, with their current values.
using Env = std::map<std::string, std::int32_t>;

struct Trace {
  std::vector<StatementId> node_ids;
  std::vector<Decision> outcomes;
  Env final_env;
  std::vector<std::int32_t> output;
  std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kDefaultStepLimit = 100000;

/// Raised mid-run; carries everything recorded up to the failure.
class RuntimeError : public std::runtime_error {
 public:
  RuntimeError(const std::string& what, Trace partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const Trace& partial_trace() const { return partial_; }

 private:
  Trace partial_;
};

class DivisionByZero : public RuntimeError {
 public:
  DivisionByZero(StatementId stmt, Trace partial);
  StatementId statement() const { return stmt_; }

 private:
  StatementId stmt_;
};

class StepLimitExceeded : public RuntimeError {
 public:
  StepLimitExceeded(std::uint64_t limit, Trace partial);
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Runs main with 32-bit wrapping arithmetic. Every executed numbered
/// statement, headers included, counts as one step.
Trace execute(const NumberedProgram& program, std::uint64_t step_limit = kDefaultStepLimit);

/// Evaluates an int-typed expression against `env` (exposed for tests).
/// Throws std::domain_error on division by zero.
std::int32_t evaluate_int(const Expr& e, const Env& env);
bool evaluate_bool(const Expr& e, const Env& env);

/// Decision lines followed by "Execution Path: ...", trailing newline.
std::string render_dynamic_report(const NumberedProgram& program, const Trace& t);

}  // namespace flowgraph
