//===- export.h - DOT and plain-text graph serialization --------*- C++ -*-===//
#pragma once

#include <string>

#include "flowgraph/cfg.h"
#include "flowgraph/dataflow.h"
#include "flowgraph/frontend.h"

namespace flowgraph {

struct DotOptions {
  // ENTRY and its control edges in dependence graphs. The CFG always shows
  // both ENTRY and EXIT.
  bool include_entry = false;
  std::string graph_name;  // empty picks a name per graph kind
};

std::string render_dot(const Cfg& cfg, const NumberedProgram& program, const DotOptions& opts = {});
std::string render_dot(const DependenceGraph& graph, const NumberedProgram& program,
                       const DotOptions& opts = {});
std::string render_dot(const VariableGraph& graph, const NumberedProgram& program,
                       const DotOptions& opts = {});

/// One `<from> -<label>-> <to>` line per edge, in the DOT edge order.
std::string render_text(const Cfg& cfg);
std::string render_text(const DependenceGraph& graph);
std::string render_text(const VariableGraph& graph);

}  // namespace flowgraph
