//===- cfg.h - Statement-level control-flow graph ---------------*- C++ -*-===//
//
// Nodes are individual numbered statements plus synthetic ENTRY and EXIT.
// Join points are implicit: both arms of an if flow straight into the
// statement after it.
//
//===----------------------------------------------------------------------===//
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowgraph/frontend.h"

namespace flowgraph {

class NodeRef {
 public:
  static constexpr NodeRef entry() { return NodeRef(Kind::kEntry, 0); }
  static constexpr NodeRef exit() { return NodeRef(Kind::kExit, 0); }
  static constexpr NodeRef stmt(StatementId id) { return NodeRef(Kind::kStmt, id); }

  constexpr bool is_entry() const { return kind_ == Kind::kEntry; }
  constexpr bool is_exit() const { return kind_ == Kind::kExit; }
  constexpr bool is_stmt() const { return kind_ == Kind::kStmt; }
  /// Only meaningful for statement nodes.
  constexpr StatementId id() const { return id_; }

  /// "ENTRY", "EXIT" or the decimal statement ID.
  std::string str() const;

  // ENTRY sorts first, EXIT last, statements by ID in between.
  friend constexpr auto operator<=>(const NodeRef&, const NodeRef&) = default;

 private:
  enum class Kind : std::uint8_t { kEntry, kStmt, kExit };
  constexpr NodeRef(Kind kind, StatementId id) : kind_(kind), id_(id) {}

  Kind kind_;
  StatementId id_;
};

enum class EdgeLabel : std::uint8_t { kUnconditional, kFalse, kTrue };

std::string_view label_name(EdgeLabel label);  // "", "false", "true"

struct CfgEdge {
  NodeRef from;
  NodeRef to;
  EdgeLabel label;

  friend constexpr auto operator<=>(const CfgEdge&, const CfgEdge&) = default;
};

class UnknownNode : public std::out_of_range {
 public:
  explicit UnknownNode(NodeRef node);
};

class Cfg {
 public:
  Cfg(std::size_t statement_count, std::vector<CfgEdge> edges,
      std::set<StatementId> loop_headers);

  /// ENTRY, statements 0..N-1, EXIT.
  const std::vector<NodeRef>& nodes() const { return nodes_; }
  /// Sorted by (from, to, label).
  const std::vector<CfgEdge>& edges() const { return edges_; }
  std::size_t statement_count() const { return nodes_.size() - 2; }

  bool contains(NodeRef node) const;
  /// Dense index: ENTRY = 0, statement i = i + 1, EXIT = N + 1.
  std::size_t index_of(NodeRef node) const;
  NodeRef node_at(std::size_t index) const { return nodes_.at(index); }

  bool is_branch(NodeRef node) const;
  bool is_loop_header(StatementId id) const { return loop_headers_.count(id) != 0; }

  const std::vector<CfgEdge>& out_edges(NodeRef node) const;
  const std::vector<CfgEdge>& in_edges(NodeRef node) const;

 private:
  std::vector<NodeRef> nodes_;
  std::vector<CfgEdge> edges_;
  std::set<StatementId> loop_headers_;
  std::vector<std::vector<CfgEdge>> out_;  // by dense index, False before True
  std::vector<std::vector<CfgEdge>> in_;
};

/// Structured translation of the numbered AST.
Cfg build_cfg(const NumberedProgram& program);

/// Outgoing edges of `node`, False before True at branches.
/// Throws UnknownNode if the node is not part of the graph.
std::vector<CfgEdge> successors(const Cfg& cfg, NodeRef node);

}  // namespace flowgraph
