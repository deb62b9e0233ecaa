#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "icsie/graph.hpp"
#include "oracles.hpp"

using namespace icsie;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ICSIE_TEST_DATA) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SideInfoGraph nine_packet_graph() {
  std::vector<IndexSet> side(9);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (j != i) side[i].push_back(j);
  side[8] = {1, 2, 4, 5, 6, 7};
  return unipartite_graph(side);
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  for (const auto& x : v)
    if (x.kind == k) return true;
  return false;
}

}  // namespace

TEST(Graph, CliqueIsValid) { EXPECT_TRUE(validate(clique_graph(4)).empty()); }

TEST(Graph, DemandInSideInfoIsNamed) {
  SideInfoGraph g = clique_graph(3);
  g.side[0] = {0, 1, 2};
  const auto v = validate(g);
  ASSERT_TRUE(has_kind(v, ViolationKind::DemandInSideInfo));
  EXPECT_EQ(to_string(ViolationKind::DemandInSideInfo), "demand-in-side-info");
  EXPECT_NE(v.front().message.find("receiver 1"), std::string::npos);
}

TEST(Graph, UndemandedPacket) {
  SideInfoGraph g;
  g.n = 3;
  g.demand = {0, 1};
  g.side = {{1}, {0, 2}};
  const auto v = validate(g);
  ASSERT_TRUE(has_kind(v, ViolationKind::UndemandedPacket));
  EXPECT_EQ(to_string(ViolationKind::UndemandedPacket), "undemanded-packet");
  try {
    require_valid(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGraph);
  }
}

TEST(Graph, OtherViolations) {
  SideInfoGraph g;
  g.n = 2;
  g.demand = {0, 5};
  g.side = {{1, 1}, {0}};
  const auto v = validate(g);
  EXPECT_TRUE(has_kind(v, ViolationKind::DemandOutOfRange));
  EXPECT_TRUE(has_kind(v, ViolationKind::SideInfoNotAscending));
  SideInfoGraph empty;
  empty.n = 1;
  EXPECT_TRUE(has_kind(validate(empty), ViolationKind::NoReceivers));
}

TEST(Graph, YSet) {
  EXPECT_TRUE(y_set(clique_graph(4), 0).empty());
  EXPECT_EQ(y_set(nine_packet_graph(), 8), (IndexSet{0, 3}));
  SideInfoGraph g;
  g.n = 3;
  g.demand = {0, 1, 2};
  g.side = {{}, {0}, {0}};
  EXPECT_EQ(y_set(g, 0), (IndexSet{1, 2}));
  try {
    y_set(g, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Graph, DeletePackets) {
  const SideInfoGraph c4 = clique_graph(4);
  const PacketDeletion d = delete_packets(c4, IndexSet{3});
  EXPECT_EQ(d.graph, clique_graph(3));
  EXPECT_EQ(d.packet_map[3], std::nullopt);
  EXPECT_EQ(d.packet_map[2], 2u);
  EXPECT_EQ(delete_packets(c4, IndexSet{}).graph, c4);
  const PacketDeletion mid = delete_packets(c4, IndexSet{1});
  EXPECT_EQ(mid.packet_map[2], 1u);
  EXPECT_EQ(mid.receiver_map[3], 2u);
}

TEST(Graph, DeleteSideEdges) {
  const SideInfoGraph c4 = clique_graph(4);
  std::vector<IndexSet> removed;
  for (std::size_t i = 0; i < 4; ++i) {
    IndexSet x = c4.side[i];
    removed.push_back({x[0], x[1]});
  }
  const SideInfoGraph thin = delete_side_edges(c4, removed);
  for (const auto& x : thin.side) EXPECT_EQ(x.size(), 1u);
  EXPECT_THROW(delete_side_edges(c4, {{0}, {}, {}, {}}), Error);
}

TEST(Graph, ParseClique) {
  const ProblemSpec s = parse_instance(slurp("clique4.json"));
  EXPECT_EQ(s.q(), 2u);
  EXPECT_EQ(s.delta_s, 1u);
  EXPECT_EQ(s.delta_c, 0u);
  EXPECT_EQ(s.graph, clique_graph(4));
  EXPECT_EQ(s.side_error_model, SideErrorModel::Error);
}

TEST(Graph, ParseRejectsNonPrimePower) {
  std::string text = slurp("clique4.json");
  text.replace(text.find("\"q\": 2"), 6, "\"q\": 6");
  try {
    parse_instance(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.cause(), ErrorCode::NotPrimePower);
    EXPECT_EQ(e.field(), "q");
  }
}

TEST(Graph, ParseReportsPosition) {
  try {
    parse_instance(slurp("malformed.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
  try {
    parse_instance(R"({"n": 1, "m": 1, "q": 2, "delta_s": 0, "delta_c": 0, "f": [0], "X": [[]]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "f");
  }
}

TEST(Graph, RoundTripIsBitExact) {
  const std::string text = slurp("nine_packet.json");
  const ProblemSpec s = parse_instance(text);
  EXPECT_EQ(s.graph, nine_packet_graph());
  EXPECT_EQ(parse_instance(serialize_instance(s)), s);
  const std::string clique = slurp("clique4.json");
  EXPECT_EQ(serialize_instance(parse_instance(clique)), clique);
}

TEST(GraphProperty, PartitionAndRoundTrip) {
  oracle::Gen gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + gen.below(6);
    const std::size_t m = n + gen.below(3);
    const SideInfoGraph g = gen.bipartite(n, m);
    ASSERT_TRUE(validate(g).empty());
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<int> seen(n, 0);
      ++seen[g.demand[i]];
      for (std::size_t j : g.side[i]) ++seen[j];
      for (std::size_t j : y_set(g, i)) ++seen[j];
      for (int c : seen) EXPECT_EQ(c, 1);
    }
    const ProblemSpec s = make_spec(g, gen.coin() ? 2 : 3, gen.below(3), gen.below(2),
                                    gen.coin() ? SideErrorModel::Error : SideErrorModel::Erasure);
    EXPECT_EQ(parse_instance(serialize_instance(s)), s);
  }
}

TEST(GraphProperty, DeletionOrderIndependent) {
  oracle::Gen gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + gen.below(4);
    const SideInfoGraph g = gen.unipartite(n);
    const std::size_t a = gen.below(n);
    std::size_t b = gen.below(n);
    if (b == a) b = (a + 1) % n;
    const IndexSet both = a < b ? IndexSet{a, b} : IndexSet{b, a};
    const SideInfoGraph once = delete_packets(g, both).graph;
    const PacketDeletion first = delete_packets(g, IndexSet{a});
    const SideInfoGraph twice = delete_packets(first.graph, IndexSet{*first.packet_map[b]}).graph;
    EXPECT_EQ(once, twice);
  }
}
