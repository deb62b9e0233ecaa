#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "icsie/encoder.hpp"
#include "icsie/simulation.hpp"
#include "oracles.hpp"

using namespace icsie;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ICSIE_TEST_DATA) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SimulationConfig exhaustive() {
  SimulationConfig c;
  c.mode = SimulationMode::Exhaustive;
  return c;
}

}  // namespace

TEST(Simulation, NinePacketExhaustiveSweep) {
  const ProblemSpec s = parse_instance(slurp("nine_packet.json"));
  const Matrix g = parse_generator(slurp("nine_packet_g.json"));
  const SimulationReport r = simulate(s, g, exhaustive());
  EXPECT_EQ(r.method, "decoder");
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.failure_count, 0u);
  ASSERT_EQ(r.receivers.size(), 9u);
  // 2^9 messages times (1 + |X_i|) error patterns.
  EXPECT_EQ(r.receivers[0].trials, 512u * 9u);
  EXPECT_EQ(r.receivers[8].trials, 512u * 7u);
  for (const auto& rs : r.receivers) EXPECT_EQ(rs.recovered, rs.trials);
}

TEST(Simulation, CliqueExhaustive) {
  const ProblemSpec s = parse_instance(slurp("clique4.json"));
  const SimulationReport r = simulate(s, parse_generator(slurp("clique4_g.json")), exhaustive());
  EXPECT_TRUE(r.passed);
  for (const auto& rs : r.receivers) EXPECT_DOUBLE_EQ(rs.rate(), 1.0);
}

TEST(Simulation, BrokenGeneratorFails) {
  const ProblemSpec s = parse_instance(slurp("clique4.json"));
  SimulationConfig c = exhaustive();
  c.max_failures = 3;
  const SimulationReport r = simulate(s, parse_generator(slurp("clique4_broken_g.json")), c);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.failure_count, 0u);
  EXPECT_EQ(r.failures.size(), std::min<std::uint64_t>(3, r.failure_count));
  const auto doc = nlohmann::json::parse(r.to_json());
  EXPECT_FALSE(doc["passed"].get<bool>());
}

TEST(Simulation, RandomModeIsSeeded) {
  const ProblemSpec s = parse_instance(slurp("nine_packet.json"));
  const Matrix g = parse_generator(slurp("nine_packet_g.json"));
  SimulationConfig c;
  c.trials = 50;
  c.seed = 7;
  const SimulationReport a = simulate(s, g, c);
  const SimulationReport b = simulate(s, g, c);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.receivers[0].trials, 50u);
}

TEST(Simulation, ExcessErrorsCanFail) {
  const ProblemSpec s = parse_instance(slurp("clique4.json"));
  SimulationConfig c = exhaustive();
  c.side_errors = 2;
  const SimulationReport r = simulate(s, parse_generator(slurp("clique4_g.json")), c);
  EXPECT_FALSE(r.passed);
}

TEST(Simulation, ChannelErrorsUseSphereOracle) {
  const ProblemSpec s = parse_instance(slurp("clique4_dc1.json"));
  const OptimalLength ol = optimal_length(s);
  const SimulationReport good = simulate(s, ol.generator.matrix, exhaustive());
  EXPECT_EQ(good.method, "sphere-oracle");
  EXPECT_TRUE(good.passed);
  const SimulationReport bad = simulate(s, parse_generator(slurp("clique4_g.json")), exhaustive());
  EXPECT_FALSE(bad.passed);
}

TEST(SimulationProperty, OptimalGeneratorsAlwaysRecover) {
  oracle::Gen gen(55);
  for (int t = 0; t < 25; ++t) {
    const ProblemSpec s = make_spec(gen.unipartite(3 + gen.below(2)), 2, gen.below(2));
    const SimulationReport r = simulate(s, optimal_length(s).generator.matrix, exhaustive());
    EXPECT_TRUE(r.passed) << r.to_json();
  }
}
