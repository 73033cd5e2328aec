//===- export.cc - Graph serializers --------------------------------------===//
#include "flowgraph/export.h"

namespace flowgraph {
namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string dot_name(NodeRef n) {
  if (n.is_entry()) return "entry";
  if (n.is_exit()) return "exit";
  return "n" + std::to_string(n.id());
}

class DotWriter {
 public:
  DotWriter(std::string_view name) { out_ = "digraph " + std::string(name) + " {\n"; }

  void line(const std::string& s) { out_ += "  " + s + ";\n"; }

  void node(NodeRef n, const NumberedProgram& program) {
    if (n.is_entry()) {
      line("entry [label=\"ENTRY\" shape=oval]");
    } else if (n.is_exit()) {
      line("exit [label=\"EXIT\" shape=oval]");
    } else {
      line(dot_name(n) + " [label=" +
           quote(std::to_string(n.id()) + ": " + program.text_of(n.id())) + "]");
    }
  }

  std::string finish() { return std::move(out_) + "}\n"; }

 private:
  std::string out_;
};

std::string pick(const DotOptions& opts, std::string_view fallback) {
  return opts.graph_name.empty() ? std::string(fallback) : opts.graph_name;
}

std::string kind_attrs(const DependenceKind& kind) {
  if (kind.type == DependenceType::kData) return "[label=" + quote(kind.variable) + " style=dashed]";
  return kind.outcome ? "[label=\"T\" style=dotted]" : "[label=\"F\" style=dotted]";
}

}  // namespace

std::string render_dot(const Cfg& cfg, const NumberedProgram& program, const DotOptions& opts) {
  DotWriter w(pick(opts, "cfg"));
  w.line("node [shape=box]");
  for (NodeRef n : cfg.nodes()) w.node(n, program);
  for (const CfgEdge& e : cfg.edges()) {
    std::string s = dot_name(e.from) + " -> " + dot_name(e.to);
    if (e.label != EdgeLabel::kUnconditional) s += " [label=" + quote(label_name(e.label)) + "]";
    w.line(s);
  }
  return w.finish();
}

std::string render_dot(const DependenceGraph& graph, const NumberedProgram& program,
                       const DotOptions& opts) {
  DotWriter w(pick(opts, "dependence"));
  w.line("node [shape=box]");
  for (NodeRef n : graph.nodes) {
    if (n.is_entry() && !opts.include_entry) continue;
    w.node(n, program);
  }
  for (const DependenceEdge& e : graph.edges) {
    if (e.from.is_entry() && !opts.include_entry) continue;
    w.line(dot_name(e.from) + " -> " + dot_name(e.to) + " " + kind_attrs(e.kind));
  }
  return w.finish();
}

std::string render_dot(const VariableGraph& graph, const NumberedProgram&, const DotOptions& opts) {
  DotWriter w(pick(opts, "variables"));
  w.line("node [shape=ellipse]");
  for (const std::string& v : graph.nodes) w.line(quote(v));
  for (const VariableEdge& e : graph.edges) {
    w.line(quote(e.from) + " -> " + quote(e.to) + " [label=" + quote("s" + std::to_string(e.via)) +
           "]");
  }
  return w.finish();
}

std::string render_text(const Cfg& cfg) {
  std::string out;
  for (const CfgEdge& e : cfg.edges()) {
    out += e.from.str();
    out += e.label == EdgeLabel::kUnconditional ? " -> " : " -" + std::string(label_name(e.label)) + "-> ";
    out += e.to.str() + "\n";
  }
  return out;
}

std::string render_text(const DependenceGraph& graph) {
  std::string out;
  for (const DependenceEdge& e : graph.edges) {
    out += e.from.str() + " -" + e.kind.str() + "-> " + e.to.str() + "\n";
  }
  return out;
}

std::string render_text(const VariableGraph& graph) {
  std::string out;
  for (const VariableEdge& e : graph.edges) {
    out += e.from + " -s" + std::to_string(e.via) + "-> " + e.to + "\n";
  }
  return out;
}

}  // namespace flowgraph
