#include <gtest/gtest.h>

#include <random>

#include "flowgraph/dataflow.h"
#include "support/fixtures.h"
#include "support/oracles.h"
#include "support/program_gen.h"

namespace flowgraph {
namespace {

using testing::kCountdown;
using testing::kProgA;
using testing::kProgB;
using testing::wrap_main;

NodeRef S(StatementId id) { return NodeRef::stmt(id); }

DependenceEdge data(StatementId d, StatementId u, const std::string& v) {
  return {S(d), S(u), DependenceKind::data(v)};
}
DependenceEdge ctrl(NodeRef b, StatementId u, bool outcome) {
  return {b, S(u), DependenceKind::control(outcome)};
}

struct Pipeline {
  NumberedProgram program;
  Cfg cfg;
  DefUse du;
  ReachSets reach;

  explicit Pipeline(const std::string& src)
      : program(testing::load(src)),
        cfg(build_cfg(program)),
        du(defs_uses(program)),
        reach(reaching_definitions(cfg, du)) {}
};

TEST(DefsUses, ProgramA) {
  DefUse du = defs_uses(testing::load(kProgA));
  EXPECT_EQ(du.defined(6), "z");
  EXPECT_EQ(du.used(6), (std::set<std::string>{"z", "y"}));
  EXPECT_EQ(du.defined(0), "x");
  EXPECT_TRUE(du.used(0).empty());
  EXPECT_FALSE(du.defined(3).has_value());
  EXPECT_EQ(du.used(3), (std::set<std::string>{"x", "y"}));
}

TEST(DefsUses, ProgramB) {
  DefUse du = defs_uses(testing::load(kProgB));
  EXPECT_EQ(du.defined(5), "c");
  EXPECT_EQ(du.used(5), (std::set<std::string>{"a", "b"}));
}

TEST(DefsUses, PrintDefinesNothing) {
  DefUse du = defs_uses(testing::load(wrap_main("int a = 1; System.out.println(a + 1);")));
  EXPECT_FALSE(du.defined(1).has_value());
  EXPECT_EQ(du.used(1), (std::set<std::string>{"a"}));
}

TEST(ReachingDefinitions, ProgramAJoin) {
  Pipeline p(kProgA);
  const auto& in6 = p.reach.in_of(S(6));
  EXPECT_TRUE(in6.count({4, "z"}));
  EXPECT_TRUE(in6.count({5, "z"}));
  EXPECT_TRUE(in6.count({1, "y"}));
  EXPECT_FALSE(in6.count({2, "z"}));
  // Frozen from the brute-force path oracle.
  EXPECT_EQ(in6, (DefinitionSet{{0, "x"}, {1, "y"}, {4, "z"}, {5, "z"}}));
  EXPECT_EQ(p.reach.in_of(S(6)), testing::brute_force_reaching(p.cfg, p.du).at(S(6)));
}

TEST(ReachingDefinitions, LaterDefinitionKills) {
  Pipeline p(wrap_main("int a = 1; a = 2; System.out.println(a);"));
  EXPECT_EQ(p.reach.in_of(S(2)), (DefinitionSet{{1, "a"}}));
  EXPECT_TRUE(p.reach.in_of(NodeRef::entry()).empty());
}

TEST(ReachingDefinitions, LoopBackEdge) {
  Pipeline p(kCountdown);
  EXPECT_EQ(p.reach.in_of(S(1)), (DefinitionSet{{0, "x"}, {2, "x"}}));
  EXPECT_EQ(p.reach.in_of(NodeRef::exit()), (DefinitionSet{{0, "x"}, {2, "x"}}));
}

TEST(ReachingDefinitions, MatchesEquations) {
  Pipeline p(kProgA);
  for (NodeRef n : p.cfg.nodes()) {
    DefinitionSet expect_in;
    for (const CfgEdge& e : p.cfg.in_edges(n)) {
      const auto& o = p.reach.out_of(e.from);
      expect_in.insert(o.begin(), o.end());
    }
    EXPECT_EQ(p.reach.in_of(n), expect_in);
  }
}

TEST(DataDependences, ProgramA) {
  Pipeline p(kProgA);
  DependenceGraph g = data_dependences(p.reach, p.du);
  std::vector<DependenceEdge> expected = {
      data(4, 6, "z"), data(5, 6, "z"), data(1, 6, "y"), data(6, 8, "z"),
      data(6, 9, "z"), data(8, 10, "z"), data(9, 10, "z"), data(1, 3, "y"),
      data(0, 3, "x"), data(1, 4, "y"), data(1, 5, "y"), data(1, 7, "y"),
  };
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(g.nodes.size(), 11u);
}

TEST(DataDependences, NoReadsNoEdges) {
  Pipeline p(wrap_main("int a = 1; int b = 2; a = 3;"));
  EXPECT_TRUE(data_dependences(p.reach, p.du).edges.empty());
}

TEST(DataDependences, ProgramB) {
  Pipeline p(kProgB);
  DependenceGraph g = data_dependences(p.reach, p.du);
  std::vector<DependenceEdge> expected = {data(1, 3, "b"), data(2, 4, "c"), data(3, 5, "a"),
                                          data(4, 5, "b")};
  EXPECT_EQ(g.edges, expected);
}

TEST(ControlDependences, ProgramA) {
  Pipeline p(kProgA);
  DependenceGraph g = control_dependences(p.program, p.cfg);
  std::vector<DependenceEdge> expected = {
      ctrl(S(3), 4, true), ctrl(S(3), 5, false), ctrl(S(7), 8, true), ctrl(S(7), 9, false)};
  for (StatementId s : {0, 1, 2, 3, 6, 7, 10}) expected.push_back(ctrl(NodeRef::entry(), s, true));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(g.edges, testing::postdominance_control_dependences(p.cfg));
}

TEST(ControlDependences, StraightLine) {
  Pipeline p(wrap_main("int a = 1; a = 2; a = 3;"));
  for (const auto& e : control_dependences(p.program, p.cfg).edges) {
    EXPECT_TRUE(e.from.is_entry());
  }
}

TEST(ControlDependences, LoopHeaderDependsOnItself) {
  Pipeline p(kCountdown);
  DependenceGraph g = control_dependences(p.program, p.cfg);
  std::vector<DependenceEdge> expected = {ctrl(NodeRef::entry(), 0, true),
                                          ctrl(NodeRef::entry(), 1, true), ctrl(S(1), 1, true),
                                          ctrl(S(1), 2, true)};
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(g.edges, testing::postdominance_control_dependences(p.cfg));
}

TEST(ControlDependences, EmptyLoopBodyStillSelfDependent) {
  Pipeline p(wrap_main("int a = 1; while (a > 0) { }"));
  EXPECT_EQ(control_dependences(p.program, p.cfg).edges,
            testing::postdominance_control_dependences(p.cfg));
}

TEST(VariableDependences, ProgramB) {
  auto program = testing::load(kProgB);
  VariableGraph g = variable_dependences(program, defs_uses(program));
  std::vector<VariableEdge> expected = {{"a", "c", 5}, {"b", "a", 3}, {"b", "c", 5}, {"c", "b", 4}};
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(g.nodes, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(VariableDependences, LiteralsOnly) {
  auto program = testing::load(wrap_main("int a = 1; int b = 2;"));
  VariableGraph g = variable_dependences(program, defs_uses(program));
  EXPECT_EQ(g.nodes.size(), 2u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(VariableDependences, ProgramA) {
  auto program = testing::load(kProgA);
  VariableGraph g = variable_dependences(program, defs_uses(program));
  std::vector<VariableEdge> expected = {{"y", "z", 4},  {"y", "z", 5}, {"y", "z", 6},
                                        {"z", "z", 6},  {"z", "z", 8}, {"z", "z", 9},
                                        {"z", "z", 10}};
  EXPECT_EQ(g.edges, expected);
}

TEST(BuildPdg, UnionKeepsKinds) {
  Pipeline p(kProgA);
  auto d = data_dependences(p.reach, p.du);
  auto c = control_dependences(p.program, p.cfg);
  auto pdg = build_pdg(d, c);
  EXPECT_EQ(pdg.edges.size(), d.edges.size() + c.edges.size());
  EXPECT_EQ(pdg.count(DependenceType::kData), d.edges.size());
  EXPECT_EQ(pdg.count(DependenceType::kControl), c.edges.size());
  EXPECT_EQ(pdg.nodes.front(), NodeRef::entry());
  EXPECT_EQ(pdg.nodes.size(), 12u);
}

TEST(BuildPdg, EmptyProgram) {
  Pipeline p(wrap_main(""));
  auto pdg = build_pdg(data_dependences(p.reach, p.du), control_dependences(p.program, p.cfg));
  EXPECT_EQ(pdg.nodes, (std::vector<NodeRef>{NodeRef::entry()}));
  EXPECT_TRUE(pdg.edges.empty());
}

TEST(BuildPdg, ProgramBDataEdgesPreserved) {
  Pipeline p(kProgB);
  auto d = data_dependences(p.reach, p.du);
  auto pdg = build_pdg(d, control_dependences(p.program, p.cfg));
  std::vector<DependenceEdge> data_only;
  for (const auto& e : pdg.edges) {
    if (e.kind.type == DependenceType::kData) data_only.push_back(e);
  }
  EXPECT_EQ(data_only, d.edges);
}

TEST(DataflowProperty, AgreesWithOracles) {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 150; ++iter) {
    testing::GenOptions opts;
    opts.allow_loops = true;
    std::string src = testing::generate_program(opts, rng);
    Pipeline p(src);

    auto oracle = testing::brute_force_reaching(p.cfg, p.du);
    for (NodeRef n : p.cfg.nodes()) ASSERT_EQ(p.reach.in_of(n), oracle.at(n)) << src;

    // Every data edge is witnessed by a def-clear path.
    for (const auto& e : data_dependences(p.reach, p.du).edges) {
      ASSERT_TRUE(testing::def_clear_path_exists(p.cfg, p.du, e.from.id(), e.to.id(),
                                                 e.kind.variable))
          << src;
    }

    ASSERT_EQ(control_dependences(p.program, p.cfg).edges,
              testing::postdominance_control_dependences(p.cfg))
        << src;

    // Variable edges agree with the def/use table.
    for (const auto& e : variable_dependences(p.program, p.du).edges) {
      ASSERT_EQ(p.du.defined(e.via), e.to);
      ASSERT_TRUE(p.du.used(e.via).count(e.from));
    }
  }
}

TEST(DataflowProperty, Deterministic) {
  Pipeline a(kProgA), b(kProgA);
  EXPECT_EQ(data_dependences(a.reach, a.du).edges, data_dependences(b.reach, b.du).edges);
  EXPECT_TRUE(std::is_sorted(a.reach.in.begin(), a.reach.in.end()));
}

}  // namespace
}  // namespace flowgraph
