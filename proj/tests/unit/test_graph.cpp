#include <gtest/gtest.h>

#include "cutcount/errors.hpp"
#include "cutcount/graph.hpp"
#include "fixtures.hpp"

namespace cutcount {
namespace {

using testing::path3;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const CutError& e) {
    return e.code();
  }
  return Errc::internal;
}

TEST(MultiGraph, ParallelEdgesKeepDistinctIds) {
  MultiGraph g(2);
  const EdgeId a = g.add_edge(0, 1);
  const EdgeId b = g.add_edge(1, 0);
  EXPECT_NE(a, b);
  EXPECT_EQ(g.num_edges(), 2u);
  ASSERT_EQ(g.incident(0).size(), 2u);
  EXPECT_EQ(g.incident(0)[0], a);
  EXPECT_EQ(g.incident(0)[1], b);
  EXPECT_EQ(g.edge(b).other(0), 1);
}

TEST(MultiGraph, RejectsSelfLoopsAndBadIds) {
  MultiGraph g(3);
  EXPECT_EQ(code_of([&] { g.add_edge(1, 1); }), Errc::self_loop);
  EXPECT_EQ(code_of([&] { g.add_edge(0, 3); }), Errc::id_out_of_range);
  EXPECT_EQ(code_of([&] { g.add_edge(-1, 0); }), Errc::id_out_of_range);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(CutInstance, TerminalSetsAreSortedAndDeduplicated) {
  MultiGraph g(4);
  const CutInstance inst(g, {2, 0, 2}, {3, 3});
  EXPECT_EQ(inst.sources, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(inst.targets, (std::vector<Vertex>{3}));
}

TEST(ValidateInstance, ReportsEachKindOfDefect) {
  MultiGraph g(3);
  g.add_edge(0, 1);
  EXPECT_EQ(code_of([&] { validate_instance(CutInstance(g, {}, {1})); }), Errc::empty_terminal_set);
  EXPECT_EQ(code_of([&] { validate_instance(CutInstance(g, {0}, {})); }), Errc::empty_terminal_set);
  EXPECT_EQ(code_of([&] { validate_instance(CutInstance(g, {0, 1}, {1})); }), Errc::disjointness_violation);
  EXPECT_EQ(code_of([&] { validate_instance(CutInstance(g, {0}, {5})); }), Errc::id_out_of_range);
  EXPECT_NO_THROW(validate_instance(CutInstance(g, {0}, {2})));
}

TEST(Reachability, RespectsRemovedEdges) {
  const CutInstance inst = path3();
  const std::vector<EdgeId> removed{1};
  const VertexMask side = reachable(inst.graph, inst.sources, removed);
  EXPECT_EQ(side, (VertexMask{true, true, false, false}));
  const VertexMask all = reachable(inst.graph, inst.sources, EdgeMask{});
  EXPECT_EQ(all, (VertexMask{true, true, true, true}));
}

TEST(IsCut, EverySingleEdgeOfAPathIsACut) {
  const CutInstance inst = path3();
  for (EdgeId e = 0; e < 3; ++e) {
    const std::vector<EdgeId> cut{e};
    EXPECT_TRUE(is_cut(inst, cut));
  }
  EXPECT_FALSE(is_cut(inst, std::vector<EdgeId>{}));
}

TEST(MakeCut, RecordsBothSides) {
  const CutInstance inst = path3();
  const EdgeCut cut = make_cut(inst, std::vector<EdgeId>{2, 1});
  EXPECT_EQ(cut.edges, (std::vector<EdgeId>{1, 2}));
  EXPECT_EQ(cut.source_side, (VertexMask{true, true, false, false}));
  EXPECT_EQ(cut.target_side, (VertexMask{false, false, false, true}));
}

TEST(Extract, RenumbersInParentOrder) {
  MultiGraph g(5);
  g.add_edge(4, 3);  // 0
  g.add_edge(1, 3);  // 1
  g.add_edge(0, 1);  // 2
  g.add_edge(1, 4);  // 3
  const VertexMask keep{false, true, false, true, true};
  const std::vector<EdgeId> edges{3, 0, 1};
  const SubInstance sub = extract(g, keep, edges, std::vector<Vertex>{1}, std::vector<Vertex>{4});
  EXPECT_EQ(sub.vertex_to_parent, (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(sub.edge_to_parent, (std::vector<EdgeId>{0, 1, 3}));
  EXPECT_EQ(sub.instance.graph.edge(0), (Edge{2, 1}));
  EXPECT_EQ(sub.instance.sources, (std::vector<Vertex>{0}));
  EXPECT_EQ(sub.instance.targets, (std::vector<Vertex>{2}));
}

TEST(Extract, RejectsEdgesLeavingTheVertexSet) {
  MultiGraph g(3);
  g.add_edge(0, 2);
  const VertexMask keep{true, true, false};
  EXPECT_EQ(code_of([&] { extract(g, keep, std::vector<EdgeId>{0}, std::vector<Vertex>{0}, std::vector<Vertex>{1}); }),
            Errc::internal);
}

TEST(Errors, NamesMatchTheirCodes) {
  EXPECT_EQ(to_string(Errc::disjointness_violation), "DisjointnessViolation");
  EXPECT_EQ(to_string(Errc::empty_target), "EmptyTarget");
  const ParseError e(7, "bad token");
  EXPECT_EQ(e.line(), 7u);
  EXPECT_EQ(e.code(), Errc::parse_error);
}

}  // namespace
}  // namespace cutcount
