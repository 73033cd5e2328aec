//===- cli.h - flowgraph command-line driver --------------------*- C++ -*-===//
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace flowgraph::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFrontend = 2,  // unreadable input, lex, parse or static error
  kLimit = 3,     // reserved for analysis limits; truncation only warns
  kRuntime = 4,   // division by zero, step limit
};

enum class Command { kPaths, kGraph, kRun, kAst };
enum class PathMode { kStatic, kDynamic };
enum class GraphKind { kCfg, kDdg, kCdg, kPdg, kVdg };
enum class GraphFormat { kDot, kText };

struct Config {
  std::string input_path;
  Command command = Command::kAst;
  PathMode mode = PathMode::kStatic;
  GraphKind kind = GraphKind::kCfg;
  GraphFormat format = GraphFormat::kDot;
  std::uint32_t loop_bound = 2;
  std::size_t max_paths = 1024;
  std::uint64_t step_limit = 100000;
  std::optional<std::string> output_path;
  bool include_entry = false;
};

/// Runs one invocation. `args` excludes the program name. The artifact goes
/// to `out` (or the --output file); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowgraph::cli
