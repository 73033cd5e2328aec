// Independent reference computations used to check the analyses. None of
// these call into the code paths they verify: they only read the CFG and
// the def/use table.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flowgraph/ast.h"
#include "flowgraph/cfg.h"
#include "flowgraph/dataflow.h"

namespace flowgraph::testing {

/// Number of ENTRY->EXIT paths of an acyclic CFG, by dynamic programming
/// over a topological order. Parallel edges count separately.
std::uint64_t count_dag_paths(const Cfg& cfg);

/// Back edges found by a depth-first search from ENTRY.
std::set<std::pair<NodeRef, NodeRef>> find_back_edges(const Cfg& cfg);

/// Reaching-definition in-sets from explicit enumeration of every
/// ENTRY-rooted walk that takes each back edge at most `max_back_edge_uses`
/// times.
std::map<NodeRef, DefinitionSet> brute_force_reaching(const Cfg& cfg, const DefUse& du,
                                                      int max_back_edge_uses = 2);

/// Postdominator sets over the CFG augmented with an ENTRY->EXIT edge,
/// by iterative intersection.
std::map<NodeRef, std::set<NodeRef>> postdominators(const Cfg& cfg);

/// Control dependences by the postdominance definition: u depends on b
/// with label L iff u postdominates b's L-successor and does not strictly
/// postdominate b. ENTRY's real edge counts as true, the augmented one as
/// false. Sorted like the implementation's edges.
std::vector<DependenceEdge> postdominance_control_dependences(const Cfg& cfg);

/// True if some CFG walk from `def` reaches `use` without passing through
/// another definition of `var` in between.
bool def_clear_path_exists(const Cfg& cfg, const DefUse& du, StatementId def, StatementId use,
                           const std::string& var);

/// All ENTRY->EXIT statement sequences, each loop header's true edge taken
/// at most `loop_bound` times per walk. Plain recursion over a set.
std::set<std::vector<StatementId>> enumerate_walks(const Cfg& cfg, std::uint32_t loop_bound);

/// Exact big-integer evaluation reduced into the signed 32-bit range.
/// Division and remainder see their operands reduced first. Returns
/// nullopt when some divisor is zero.
std::optional<std::int32_t> bigint_evaluate(const Expr& e,
                                            const std::map<std::string, std::int32_t>& env);

/// Fully parenthesized prefix form, e.g. "(+ (* a b) c)".
std::string sexpr(const Expr& e);

}  // namespace flowgraph::testing
