//===- cli.cc - flowgraph command-line driver -----------------------------===//
#include "flowgraph/tools/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "flowgraph/cfg.h"
#include "flowgraph/dataflow.h"
#include "flowgraph/export.h"
#include "flowgraph/frontend.h"
#include "flowgraph/interp.h"
#include "flowgraph/paths.h"

namespace flowgraph::cli {
namespace {

// Thrown by the pipeline to leave with a specific exit code; the message
// has already been written to the error stream.
struct Exit {
  int code;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

NumberedProgram load(const Config& cfg, std::ostream& err) {
  auto source = read_file(cfg.input_path);
  if (!source) {
    err << "flowgraph: error: cannot read '" << cfg.input_path << "'\n";
    throw Exit{kFrontend};
  }
  try {
    return load_program(*source);
  } catch (const FrontendError& e) {
    err << cfg.input_path << ":" << e.what() << "\n";
    throw Exit{kFrontend};
  }
}

Trace run_program(const NumberedProgram& program, const Config& cfg, std::ostream& err,
                  std::string* partial_output) {
  try {
    return execute(program, cfg.step_limit);
  } catch (const RuntimeError& e) {
    if (partial_output) {
      for (std::int32_t v : e.partial_trace().output) *partial_output += std::to_string(v) + "\n";
    }
    err << cfg.input_path << ": runtime error: " << e.what() << "\n";
    throw Exit{kRuntime};
  }
}

std::string paths_command(const NumberedProgram& program, const Config& cfg, std::ostream& err) {
  if (cfg.mode == PathMode::kDynamic) {
    return render_dynamic_report(program, run_program(program, cfg, err, nullptr));
  }
  PathSet ps = enumerate_static_paths(build_cfg(program), cfg.loop_bound, cfg.max_paths);
  if (ps.truncated) {
    err << "flowgraph: warning: path enumeration stopped after " << ps.paths.size()
        << " paths (--max-paths)\n";
  }
  return render_path_report(program, ps);
}

std::string graph_command(const NumberedProgram& program, const Config& cfg) {
  Cfg graph = build_cfg(program);
  DotOptions opts;
  opts.include_entry = cfg.include_entry;
  bool dot = cfg.format == GraphFormat::kDot;
  if (cfg.kind == GraphKind::kCfg) {
    return dot ? render_dot(graph, program, opts) : render_text(graph);
  }
  DefUse du = defs_uses(program);
  if (cfg.kind == GraphKind::kVdg) {
    VariableGraph vdg = variable_dependences(program, du);
    return dot ? render_dot(vdg, program, opts) : render_text(vdg);
  }
  DependenceGraph result;
  switch (cfg.kind) {
    case GraphKind::kDdg:
      opts.graph_name = "ddg";
      result = data_dependences(reaching_definitions(graph, du), du);
      break;
    case GraphKind::kCdg:
      opts.graph_name = "cdg";
      result = control_dependences(program, graph);
      break;
    default:
      opts.graph_name = "pdg";
      result = build_pdg(data_dependences(reaching_definitions(graph, du), du),
                         control_dependences(program, graph));
      break;
  }
  return dot ? render_dot(result, program, opts) : render_text(result);
}

std::string run_command(const NumberedProgram& program, const Config& cfg, std::ostream& out,
                        std::ostream& err) {
  std::string text;
  Trace t;
  try {
    t = run_program(program, cfg, err, &text);
  } catch (const Exit&) {
    out << text;
    throw;
  }
  for (std::int32_t v : t.output) text += std::to_string(v) + "\n";
  for (const auto& [name, value] : t.final_env) text += name + " = " + std::to_string(value) + "\n";
  return text;
}

int dispatch(const Config& cfg, std::ostream& out, std::ostream& err) {
  NumberedProgram program = load(cfg, err);
  std::string artifact;
  switch (cfg.command) {
    case Command::kPaths: artifact = paths_command(program, cfg, err); break;
    case Command::kGraph: artifact = graph_command(program, cfg); break;
    case Command::kRun: artifact = run_command(program, cfg, out, err); break;
    case Command::kAst: artifact = dump_ast(program); break;
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!(file << artifact)) {
      err << "flowgraph: error: cannot write '" << *cfg.output_path << "'\n";
      return kUsage;
    }
  } else {
    out << artifact;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Control-flow, dependence and execution-path analysis for MiniJava-CF programs",
               "flowgraph"};
  app.require_subcommand(1);
  app.add_option("input", cfg.input_path, "Source file (one class with a main method)")
      ->required();
  app.add_option("-o,--output", cfg.output_path, "Write the artifact to a file instead of stdout");

  const std::map<std::string, PathMode> modes{{"static", PathMode::kStatic},
                                              {"dynamic", PathMode::kDynamic}};
  const std::map<std::string, GraphKind> kinds{{"cfg", GraphKind::kCfg},
                                               {"ddg", GraphKind::kDdg},
                                               {"cdg", GraphKind::kCdg},
                                               {"pdg", GraphKind::kPdg},
                                               {"vdg", GraphKind::kVdg}};
  const std::map<std::string, GraphFormat> formats{{"dot", GraphFormat::kDot},
                                                   {"text", GraphFormat::kText}};

  auto* paths = app.add_subcommand("paths", "Print static or dynamic execution paths");
  paths->add_option("--mode", cfg.mode, "static | dynamic")
      ->transform(CLI::CheckedTransformer(modes))
      ->capture_default_str();
  paths->add_option("--loop-bound", cfg.loop_bound, "Max true-edge takes per loop header per path")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  paths->add_option("--max-paths", cfg.max_paths, "Stop enumerating after this many paths")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  paths->add_option("--step-limit", cfg.step_limit, "Statement budget for dynamic mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* graph = app.add_subcommand("graph", "Serialize a control-flow or dependence graph");
  graph->add_option("--kind", cfg.kind, "cfg | ddg | cdg | pdg | vdg")
      ->transform(CLI::CheckedTransformer(kinds))
      ->capture_default_str();
  graph->add_option("--format", cfg.format, "dot | text")
      ->transform(CLI::CheckedTransformer(formats))
      ->capture_default_str();
  graph->add_flag("--include-entry", cfg.include_entry,
                  "Keep ENTRY and its control edges in DOT dependence graphs");

  auto* run = app.add_subcommand("run", "Execute the program; print its output and final variables");
  run->add_option("--step-limit", cfg.step_limit, "Statement budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* ast = app.add_subcommand("ast", "Dump the syntax tree with statement IDs");

  // Options given after the subcommand name may still be global ones.
  for (auto* sub : {paths, graph, run, ast}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0 and print to `out`; everything else is a usage error.
    if (app.exit(e, out, err) == 0) return kOk;
    return kUsage;
  }

  if (paths->parsed()) cfg.command = Command::kPaths;
  if (graph->parsed()) cfg.command = Command::kGraph;
  if (run->parsed()) cfg.command = Command::kRun;
  if (ast->parsed()) cfg.command = Command::kAst;

  try {
    return dispatch(cfg, out, err);
  } catch (const Exit& e) {
    return e.code;
  }
}

}  // namespace flowgraph::cli
