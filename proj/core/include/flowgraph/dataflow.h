//===- dataflow.h - Def/use, reaching definitions, dependence graphs -*- C++ -*-===//
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flowgraph/cfg.h"
#include "flowgraph/frontend.h"

namespace flowgraph {

/// Per-statement definitions and uses. Each statement defines at most one
/// variable; headers and println define nothing.
struct DefUse {
  std::vector<std::optional<std::string>> defs;  // indexed by StatementId
  std::vector<std::set<std::string>> uses;

  const std::optional<std::string>& defined(StatementId id) const { return defs.at(id); }
  const std::set<std::string>& used(StatementId id) const { return uses.at(id); }
  std::size_t size() const { return defs.size(); }
};

DefUse defs_uses(const NumberedProgram& program);

struct Definition {
  StatementId stmt;
  std::string variable;

  friend auto operator<=>(const Definition&, const Definition&) = default;
};

using DefinitionSet = std::set<Definition>;

struct ReachSets {
  std::map<NodeRef, DefinitionSet> in;
  std::map<NodeRef, DefinitionSet> out;

  const DefinitionSet& in_of(NodeRef n) const { return in.at(n); }
  const DefinitionSet& out_of(NodeRef n) const { return out.at(n); }
};

/// Least fixed point of the forward may-analysis, by worklist iteration.
ReachSets reaching_definitions(const Cfg& cfg, const DefUse& du);

enum class DependenceType : std::uint8_t { kData, kControl };

struct DependenceKind {
  DependenceType type;
  std::string variable;  // data edges
  bool outcome = true;   // control edges

  static DependenceKind data(std::string var) { return {DependenceType::kData, std::move(var), true}; }
  static DependenceKind control(bool outcome) { return {DependenceType::kControl, {}, outcome}; }

  /// "data(z)", "control(T)" or "control(F)".
  std::string str() const;

  friend auto operator<=>(const DependenceKind& a, const DependenceKind& b) {
    if (auto c = a.type <=> b.type; c != 0) return c;
    if (auto c = a.variable <=> b.variable; c != 0) return c;
    return a.outcome <=> b.outcome;
  }
  friend bool operator==(const DependenceKind&, const DependenceKind&) = default;
};

struct DependenceEdge {
  NodeRef from;
  NodeRef to;
  DependenceKind kind;

  friend auto operator<=>(const DependenceEdge& a, const DependenceEdge& b) {
    if (auto c = a.from <=> b.from; c != 0) return c;
    if (auto c = a.to <=> b.to; c != 0) return c;
    return a.kind <=> b.kind;
  }
  friend bool operator==(const DependenceEdge&, const DependenceEdge&) = default;
};

struct DependenceGraph {
  std::vector<NodeRef> nodes;         // ascending
  std::vector<DependenceEdge> edges;  // sorted by (from, to, kind)

  std::size_t count(DependenceType type) const;
};

/// Edge d -> u tagged with v whenever definition (d, v) reaches u and u reads v.
DependenceGraph data_dependences(const ReachSets& reach, const DefUse& du);

/// Control dependence read off the AST nesting. Top-level statements hang
/// off ENTRY; loop headers also depend on themselves.
DependenceGraph control_dependences(const NumberedProgram& program, const Cfg& cfg);

/// Union of the two, kinds preserved. Nodes are the statements plus ENTRY.
DependenceGraph build_pdg(const DependenceGraph& data, const DependenceGraph& control);

struct VariableEdge {
  std::string from;  // variable read
  std::string to;    // variable defined
  StatementId via;

  friend auto operator<=>(const VariableEdge&, const VariableEdge&) = default;
};

struct VariableGraph {
  std::vector<std::string> nodes;   // sorted by name
  std::vector<VariableEdge> edges;  // sorted by (from, to, via)
};

VariableGraph variable_dependences(const NumberedProgram& program, const DefUse& du);

}  // namespace flowgraph
