#include <gtest/gtest.h>

#include <vector>

#include "stargenus/stargenus.hpp"
#include "support.hpp"

namespace sg = stargenus;
using sg::LocalStructure;
using sg::SlotPair;
using sg::VertexKind;

namespace {

sg::RsCircuit circuit_of(const sg::StarGraph& g) { return sg::find_rs_circuit(g, *sg::find_source_sink_orientation(g)); }

std::vector<std::size_t> cycle_lengths(const sg::StarGraph& g) {
  const auto o = *sg::find_source_sink_orientation(g);
  std::vector<std::size_t> out;
  for (const auto& c : sg::cycles_of(g, o, sg::initial_transition_system(g, o))) out.push_back(c.size());
  return out;
}

}  // namespace

TEST(ClassifyLocal, Examples) {
  const std::vector<SlotPair> r4 = {{1, 0}, {3, 2}};
  EXPECT_EQ(sg::classify_local(4, r4), LocalStructure::rotating);
  const std::vector<SlotPair> split = {{1, 4}, {3, 2}, {5, 0}};
  EXPECT_EQ(sg::classify_local(6, split), LocalStructure::splitting);
  const std::vector<SlotPair> all_opposite = {{1, 4}, {3, 0}, {5, 2}};
  EXPECT_EQ(sg::classify_local(6, all_opposite), LocalStructure::invalid);
  const std::vector<SlotPair> x4 = {{1, 3}, {3, 1}};
  EXPECT_EQ(sg::classify_local(4, x4), LocalStructure::invalid);
}

TEST(TransitionSystem, CanonicalRule) {
  const auto g8 = sg::fixtures::g8();
  const auto ts = sg::initial_transition_system(g8, *sg::find_source_sink_orientation(g8));
  EXPECT_EQ(ts.next.at(0), (std::vector<int>{-1, 2, -1, 0}));

  const auto t3 = sg::fixtures::gt3f();
  const auto ts3 = sg::initial_transition_system(t3, *sg::find_source_sink_orientation(t3));
  EXPECT_EQ(ts3.next.at(0), (std::vector<int>{-1, 2, -1, 4, -1, 0}));

  const auto h = sg::fixtures::ghopf();
  const auto tsh = sg::initial_transition_system(h, *sg::find_source_sink_orientation(h));
  EXPECT_EQ(tsh.next.at(0), (std::vector<int>{-1, 2, -1, 0}));
  EXPECT_EQ(tsh.next.at(1), (std::vector<int>{1, -1, 3, -1}));
}

TEST(CyclesOf, CanonicalSystems) {
  EXPECT_EQ(cycle_lengths(sg::fixtures::g8()), std::vector<std::size_t>{2});
  EXPECT_EQ(cycle_lengths(sg::fixtures::gt3c()), std::vector<std::size_t>{3});
  // loop (0,1) arrives at 1 and continues out of 2 into the next loop
  EXPECT_EQ(cycle_lengths(sg::fixtures::gt3f()), std::vector<std::size_t>{3});
}

TEST(RsCircuit, FixtureCircuits) {
  const auto g8 = sg::fixtures::g8();
  const auto c8 = circuit_of(g8);
  EXPECT_EQ(c8.circuit.edges.size(), 2U);
  EXPECT_EQ(sg::classify_vertices(g8, c8.circuit).at(0).kind, VertexKind::rotating4);

  const auto t3f = sg::fixtures::gt3f();
  const auto cf = circuit_of(t3f);
  EXPECT_EQ(cf.circuit.edges.size(), 3U);
  EXPECT_EQ(sg::classify_vertices(t3f, cf.circuit).at(0).kind, VertexKind::rotating6_flat);

  const auto t3c = sg::fixtures::gt3c();
  EXPECT_EQ(sg::classify_vertices(t3c, circuit_of(t3c).circuit).at(0).kind, VertexKind::rotating6_crossed);

  const auto h = sg::fixtures::ghopf();
  const auto ch = circuit_of(h);
  std::vector<sg::VertexId> order;
  for (const auto& v : ch.circuit.visits) order.push_back(v.vertex);
  EXPECT_EQ(order, (std::vector<sg::VertexId>{0, 1, 0, 1}));
  for (const auto& [v, cls] : sg::classify_vertices(h, ch.circuit)) EXPECT_EQ(cls.kind, VertexKind::rotating4);
  EXPECT_EQ(sg::format_circuit(ch.circuit, sg::classify_vertices(h, ch.circuit)),
            "circuit: e0 e1 e2 e3\nclass: 0 rotating4\nclass: 1 rotating4\n");
}

TEST(RsCircuit, RejectsBadInput) {
  const auto g = sg::fixtures::g8();
  sg::Orientation o = *sg::find_source_sink_orientation(g);
  o.phase[0] = 1;  // directions no longer match the phases
  EXPECT_THROW(sg::find_rs_circuit(g, o), std::invalid_argument);
}

TEST(RsCircuit, EulerAndStructureOnRandomGraphs) {
  for (const auto& g : sg::testing::random_corpus(300, 12, 5)) {
    const auto o = *sg::find_source_sink_orientation(g);
    const auto rs = sg::find_rs_circuit(g, o);
    EXPECT_TRUE(sg::check_rs_circuit(g, rs.transitions, rs.circuit).empty()) << sg::to_stg(g);
    EXPECT_EQ(rs.circuit.edges.front().id, g.edges().begin()->first);
    // each merge strictly lowers the number of cycles
    ASSERT_FALSE(rs.cycle_counts.empty());
    EXPECT_EQ(rs.cycle_counts.back(), 1U);
    for (std::size_t i = 1; i < rs.cycle_counts.size(); ++i) EXPECT_LT(rs.cycle_counts[i], rs.cycle_counts[i - 1]);
    EXPECT_NO_THROW(sg::classify_vertices(g, rs.circuit));
    const auto again = sg::find_rs_circuit(g, o);
    EXPECT_EQ(again.circuit, rs.circuit);
    EXPECT_EQ(again.transitions, rs.transitions);
  }
}

TEST(RsCircuit, CheckerCatchesDamage) {
  const auto g = sg::fixtures::ghopf();
  auto rs = circuit_of(g);
  std::swap(rs.circuit.edges[0], rs.circuit.edges[1]);
  EXPECT_FALSE(sg::check_rs_circuit(g, rs.transitions, rs.circuit).empty());
}

TEST(Classify, SplittingPrincipalIsOppositeVisit) {
  bool seen = false;
  for (const auto& g : sg::testing::random_corpus(200, 6, 9)) {
    const auto rs = circuit_of(g);
    for (const auto& [v, cls] : sg::classify_vertices(g, rs.circuit)) {
      if (cls.kind != VertexKind::splitting6) continue;
      seen = true;
      const auto& visit = rs.circuit.visits.at(cls.principal);
      EXPECT_EQ(visit.vertex, v);
      EXPECT_TRUE(sg::slots_opposite(6, visit.arrive, visit.depart));
    }
  }
  EXPECT_TRUE(seen) << "corpus should contain a splitting vertex";
}
