//===- dataflow.cc - Def/use tables and dependence graphs -----------------===//
#include "flowgraph/dataflow.h"

#include <algorithm>
#include <deque>

#include <boost/dynamic_bitset.hpp>

namespace flowgraph {

std::string DependenceKind::str() const {
  if (type == DependenceType::kData) return "data(" + variable + ")";
  return outcome ? "control(T)" : "control(F)";
}

std::size_t DependenceGraph::count(DependenceType type) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const DependenceEdge& e) { return e.kind.type == type; }));
}

namespace {

void collect_reads(const Expr& e, std::set<std::string>& out) {
  std::visit(Overloaded{
                 [](const IntLiteral&) {},
                 [&](const VarRef& v) { out.insert(v.name); },
                 [&](const Unary& u) { collect_reads(*u.operand, out); },
                 [&](const Binary& b) {
                   collect_reads(*b.lhs, out);
                   collect_reads(*b.rhs, out);
                 },
             },
             e.node);
}

class DefUseCollector {
 public:
  explicit DefUseCollector(std::size_t n) {
    du_.defs.resize(n);
    du_.uses.resize(n);
  }

  DefUse run(const Block& body) {
    visit(body);
    return std::move(du_);
  }

 private:
  void visit(const Block& b) {
    for (const Stmt& s : b.stmts) visit(s);
  }

  void visit(const Stmt& s) {
    std::visit(Overloaded{
                   [&](const VarDecl& d) {
                     du_.defs[*s.id] = d.name;
                     collect_reads(d.init, du_.uses[*s.id]);
                   },
                   [&](const Assign& a) {
                     du_.defs[*s.id] = a.name;
                     collect_reads(a.value, du_.uses[*s.id]);
                   },
                   [&](const Print& p) { collect_reads(p.value, du_.uses[*s.id]); },
                   [&](const If& i) {
                     collect_reads(i.cond, du_.uses[*s.id]);
                     visit(*i.then_branch);
                     if (i.else_branch) visit(**i.else_branch);
                   },
                   [&](const While& w) {
                     collect_reads(w.cond, du_.uses[*s.id]);
                     visit(*w.body);
                   },
                   [&](const Block& b) { visit(b); },
               },
               s.node);
  }

  DefUse du_;
};

}  // namespace

DefUse defs_uses(const NumberedProgram& program) {
  return DefUseCollector(program.size()).run(program.ast.main_body);
}

ReachSets reaching_definitions(const Cfg& cfg, const DefUse& du) {
  using Bits = boost::dynamic_bitset<>;
  // A definition is identified by the statement that makes it.
  const std::size_t n_defs = du.size();
  const std::size_t n_nodes = cfg.nodes().size();

  std::map<std::string, Bits> defs_of_var;
  for (StatementId s = 0; s < n_defs; ++s) {
    if (const auto& v = du.defined(s)) {
      auto [it, fresh] = defs_of_var.try_emplace(*v, n_defs);
      it->second.set(s);
    }
  }

  std::vector<Bits> gen(n_nodes, Bits(n_defs));
  std::vector<Bits> kill(n_nodes, Bits(n_defs));
  for (StatementId s = 0; s < n_defs; ++s) {
    if (const auto& v = du.defined(s)) {
      std::size_t idx = cfg.index_of(NodeRef::stmt(s));
      gen[idx].set(s);
      kill[idx] = defs_of_var.at(*v);
      kill[idx].reset(s);
    }
  }

  std::vector<Bits> in(n_nodes, Bits(n_defs));
  std::vector<Bits> out(n_nodes, Bits(n_defs));
  std::deque<std::size_t> worklist;
  std::vector<bool> queued(n_nodes, true);
  for (std::size_t i = 0; i < n_nodes; ++i) worklist.push_back(i);

  while (!worklist.empty()) {
    std::size_t idx = worklist.front();
    worklist.pop_front();
    queued[idx] = false;
    NodeRef node = cfg.node_at(idx);

    Bits merged(n_defs);
    for (const CfgEdge& e : cfg.in_edges(node)) merged |= out[cfg.index_of(e.from)];
    in[idx] = merged;

    Bits next = gen[idx] | (merged - kill[idx]);
    if (next == out[idx]) continue;
    out[idx] = std::move(next);
    for (const CfgEdge& e : cfg.out_edges(node)) {
      std::size_t succ = cfg.index_of(e.to);
      if (!queued[succ]) {
        queued[succ] = true;
        worklist.push_back(succ);
      }
    }
  }

  auto to_set = [&](const Bits& bits) {
    DefinitionSet set;
    for (auto s = bits.find_first(); s != Bits::npos; s = bits.find_next(s)) {
      set.insert({static_cast<StatementId>(s), *du.defined(static_cast<StatementId>(s))});
    }
    return set;
  };

  ReachSets result;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    result.in.emplace(cfg.node_at(i), to_set(in[i]));
    result.out.emplace(cfg.node_at(i), to_set(out[i]));
  }
  return result;
}

DependenceGraph data_dependences(const ReachSets& reach, const DefUse& du) {
  DependenceGraph g;
  for (StatementId u = 0; u < du.size(); ++u) {
    g.nodes.push_back(NodeRef::stmt(u));
    const auto& reads = du.used(u);
    for (const Definition& d : reach.in_of(NodeRef::stmt(u))) {
      if (reads.count(d.variable)) {
        g.edges.push_back({NodeRef::stmt(d.stmt), NodeRef::stmt(u), DependenceKind::data(d.variable)});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

class ControlCollector {
 public:
  std::vector<DependenceEdge> run(const Block& body) {
    visit(body, NodeRef::entry(), true);
    return std::move(edges_);
  }

 private:
  void visit(const Block& b, NodeRef parent, bool outcome) {
    for (const Stmt& s : b.stmts) visit(s, parent, outcome);
  }

  void visit(const Stmt& s, NodeRef parent, bool outcome) {
    if (const auto* b = std::get_if<Block>(&s.node)) {
      visit(*b, parent, outcome);
      return;
    }
    NodeRef self = NodeRef::stmt(*s.id);
    edges_.push_back({parent, self, DependenceKind::control(outcome)});
    if (const auto* i = std::get_if<If>(&s.node)) {
      visit(*i->then_branch, self, true);
      if (i->else_branch) visit(**i->else_branch, self, false);
    } else if (const auto* w = std::get_if<While>(&s.node)) {
      edges_.push_back({self, self, DependenceKind::control(true)});
      visit(*w->body, self, true);
    }
  }

  std::vector<DependenceEdge> edges_;
};

}  // namespace

DependenceGraph control_dependences(const NumberedProgram& program, const Cfg& cfg) {
  DependenceGraph g;
  for (NodeRef n : cfg.nodes()) {
    if (!n.is_exit()) g.nodes.push_back(n);
  }
  g.edges = ControlCollector().run(program.ast.main_body);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

DependenceGraph build_pdg(const DependenceGraph& data, const DependenceGraph& control) {
  DependenceGraph g;
  std::set<NodeRef> nodes{NodeRef::entry()};
  nodes.insert(data.nodes.begin(), data.nodes.end());
  nodes.insert(control.nodes.begin(), control.nodes.end());
  g.nodes.assign(nodes.begin(), nodes.end());
  g.edges = data.edges;
  g.edges.insert(g.edges.end(), control.edges.begin(), control.edges.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

VariableGraph variable_dependences(const NumberedProgram& program, const DefUse& du) {
  VariableGraph g;
  std::set<std::string> names;
  for (StatementId s = 0; s < program.size(); ++s) {
    const auto& def = du.defined(s);
    if (!def) continue;
    names.insert(*def);
    for (const std::string& w : du.used(s)) g.edges.push_back({w, *def, s});
  }
  g.nodes.assign(names.begin(), names.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace flowgraph
