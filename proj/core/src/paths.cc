//===- paths.cc - Bounded depth-first path enumeration --------------------===//
#include "flowgraph/paths.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace flowgraph {
namespace {

class PathEnumerator {
 public:
  PathEnumerator(const Cfg& cfg, std::uint32_t loop_bound, std::size_t max_paths)
      : cfg_(cfg),
        loop_bound_(loop_bound),
        max_paths_(max_paths),
        true_taken_(cfg.statement_count(), 0),
        visits_(cfg.statement_count(), 0) {}

  PathSet run() {
    PathSet result;
    result.loop_bound = loop_bound_;

    // Explicit stack: paths through unrolled loops can be long.
    std::vector<Frame> stack;
    stack.push_back({NodeRef::entry()});
    while (!stack.empty()) {
      Frame& top = stack.back();
      undo_decision(top);

      if (top.node.is_exit()) {
        stack.pop_back();
        if (!record(result)) break;
        continue;
      }

      const auto& edges = cfg_.out_edges(top.node);
      if (top.next_edge == edges.size()) {
        leave(top.node);
        stack.pop_back();
        continue;
      }

      const CfgEdge& e = edges[top.next_edge++];
      if (e.label != EdgeLabel::kUnconditional) {
        StatementId h = top.node.id();
        bool outcome = e.label == EdgeLabel::kTrue;
        bool counts = outcome && cfg_.is_loop_header(h);
        if (counts && true_taken_[h] >= loop_bound_) continue;
        if (counts) ++true_taken_[h];
        decisions_.push_back({h, outcome, visits_[h]});
        top.decided = true;
        top.counted = counts;
      }
      NodeRef next = e.to;
      stack.push_back({next});
      enter(next);
    }

    sort(result.paths);
    return result;
  }

 private:
  struct Frame {
    NodeRef node;
    std::size_t next_edge = 0;
    bool decided = false;
    bool counted = false;
  };

  void enter(NodeRef n) {
    if (!n.is_stmt()) return;
    ids_.push_back(n.id());
    if (cfg_.is_branch(n)) ++visits_[n.id()];
  }

  void leave(NodeRef n) {
    if (!n.is_stmt()) return;
    ids_.pop_back();
    if (cfg_.is_branch(n)) --visits_[n.id()];
  }

  void undo_decision(Frame& f) {
    if (!f.decided) return;
    if (f.counted) --true_taken_[decisions_.back().branch];
    decisions_.pop_back();
    f.decided = false;
    f.counted = false;
  }

  // Returns false once the path budget is exhausted.
  bool record(PathSet& result) {
    if (!seen_.insert(ids_).second) return true;
    if (result.paths.size() == max_paths_) {
      result.truncated = true;
      return false;
    }
    result.paths.push_back({decisions_, ids_});
    return true;
  }

  void sort(std::vector<StaticPath>& paths) const {
    const std::size_t n = cfg_.statement_count();
    std::vector<std::vector<std::uint32_t>> keys;
    keys.reserve(paths.size());
    for (const StaticPath& p : paths) {
      std::vector<std::uint32_t> key(n, 0);
      for (const Decision& d : p.decisions) key[d.branch] += d.outcome ? 1 : 0;
      std::reverse(key.begin(), key.end());  // most significant digit first
      keys.push_back(std::move(key));
    }
    std::vector<std::size_t> order(paths.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (keys[a] != keys[b]) return keys[a] < keys[b];
      return paths[a].node_ids < paths[b].node_ids;
    });
    std::vector<StaticPath> sorted;
    sorted.reserve(paths.size());
    for (std::size_t i : order) sorted.push_back(std::move(paths[i]));
    paths = std::move(sorted);
  }

  const Cfg& cfg_;
  std::uint32_t loop_bound_;
  std::size_t max_paths_;
  std::vector<std::uint32_t> true_taken_;
  std::vector<std::uint32_t> visits_;
  std::vector<StatementId> ids_;
  std::vector<Decision> decisions_;
  std::set<std::vector<StatementId>> seen_;
};

}  // namespace

PathSet enumerate_static_paths(const Cfg& cfg, std::uint32_t loop_bound, std::size_t max_paths) {
  return PathEnumerator(cfg, loop_bound, std::max<std::size_t>(max_paths, 1)).run();
}

std::string render_decision(const NumberedProgram& program, const Decision& d) {
  return "Line Number " + std::to_string(d.branch) + ": " + program.condition_of(d.branch) +
         (d.outcome ? ": TRUE" : ": FALSE");
}

std::string render_id_sequence(const std::vector<StatementId>& ids) {
  std::string out;
  for (StatementId id : ids) out += " " + std::to_string(id);
  return out;
}

std::string render_path_report(const NumberedProgram& program, const PathSet& ps) {
  std::string out;
  for (std::size_t k = 0; k < ps.paths.size(); ++k) {
    if (k > 0) out += "\n";
    for (const Decision& d : ps.paths[k].decisions) out += render_decision(program, d) + "\n";
    out += "Execution Path " + std::to_string(k + 1) + ":" +
           render_id_sequence(ps.paths[k].node_ids) + "\n";
  }
  return out;
}

}  // namespace flowgraph
