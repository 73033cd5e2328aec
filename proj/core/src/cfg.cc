//===- cfg.cc - Structured CFG construction -------------------------------===//
#include "flowgraph/cfg.h"

#include <algorithm>

namespace flowgraph {

std::string NodeRef::str() const {
  if (is_entry()) return "ENTRY";
  if (is_exit()) return "EXIT";
  return std::to_string(id_);
}

std::string_view label_name(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::kUnconditional: return "";
    case EdgeLabel::kFalse: return "false";
    case EdgeLabel::kTrue: return "true";
  }
  return "";
}

UnknownNode::UnknownNode(NodeRef node)
    : std::out_of_range("node " + node.str() + " is not in the graph") {}

Cfg::Cfg(std::size_t statement_count, std::vector<CfgEdge> edges,
         std::set<StatementId> loop_headers)
    : edges_(std::move(edges)), loop_headers_(std::move(loop_headers)) {
  nodes_.reserve(statement_count + 2);
  nodes_.push_back(NodeRef::entry());
  for (std::size_t i = 0; i < statement_count; ++i) {
    nodes_.push_back(NodeRef::stmt(static_cast<StatementId>(i)));
  }
  nodes_.push_back(NodeRef::exit());

  std::sort(edges_.begin(), edges_.end());
  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  for (const CfgEdge& e : edges_) {
    out_[index_of(e.from)].push_back(e);
    in_[index_of(e.to)].push_back(e);
  }
  for (auto& list : out_) {
    std::stable_sort(list.begin(), list.end(),
                     [](const CfgEdge& a, const CfgEdge& b) { return a.label < b.label; });
  }
}

bool Cfg::contains(NodeRef node) const {
  return !node.is_stmt() || node.id() < statement_count();
}

std::size_t Cfg::index_of(NodeRef node) const {
  if (!contains(node)) throw UnknownNode(node);
  if (node.is_entry()) return 0;
  if (node.is_exit()) return nodes_.size() - 1;
  return node.id() + 1;
}

bool Cfg::is_branch(NodeRef node) const { return out_edges(node).size() == 2; }

const std::vector<CfgEdge>& Cfg::out_edges(NodeRef node) const { return out_[index_of(node)]; }

const std::vector<CfgEdge>& Cfg::in_edges(NodeRef node) const { return in_[index_of(node)]; }

namespace {

// Lowers statements back to front: each call receives the node control
// reaches after the statement and returns the statement's entry node.
class CfgBuilder {
 public:
  Cfg run(const NumberedProgram& program) {
    NodeRef first = lower(program.ast.main_body, NodeRef::exit());
    edge(NodeRef::entry(), first, EdgeLabel::kUnconditional);
    return Cfg(program.size(), std::move(edges_), std::move(loop_headers_));
  }

 private:
  void edge(NodeRef from, NodeRef to, EdgeLabel label) { edges_.push_back({from, to, label}); }

  NodeRef lower(const Block& block, NodeRef next) {
    for (auto it = block.stmts.rbegin(); it != block.stmts.rend(); ++it) next = lower(*it, next);
    return next;
  }

  NodeRef lower(const Stmt& s, NodeRef next) {
    if (const auto* b = std::get_if<Block>(&s.node)) return lower(*b, next);
    NodeRef self = NodeRef::stmt(*s.id);
    if (const auto* i = std::get_if<If>(&s.node)) {
      NodeRef on_true = lower(*i->then_branch, next);
      NodeRef on_false = i->else_branch ? lower(**i->else_branch, next) : next;
      edge(self, on_true, EdgeLabel::kTrue);
      edge(self, on_false, EdgeLabel::kFalse);
    } else if (const auto* w = std::get_if<While>(&s.node)) {
      loop_headers_.insert(*s.id);
      NodeRef body = lower(*w->body, self);
      edge(self, body, EdgeLabel::kTrue);
      edge(self, next, EdgeLabel::kFalse);
    } else {
      edge(self, next, EdgeLabel::kUnconditional);
    }
    return self;
  }

  std::vector<CfgEdge> edges_;
  std::set<StatementId> loop_headers_;
};

}  // namespace

Cfg build_cfg(const NumberedProgram& program) { return CfgBuilder().run(program); }

std::vector<CfgEdge> successors(const Cfg& cfg, NodeRef node) { return cfg.out_edges(node); }

}  // namespace flowgraph
