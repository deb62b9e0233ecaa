#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "icsie/encoder.hpp"

using icsie::cli::run_cli;

namespace {

const std::string kData = ICSIE_TEST_DATA;

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST(Cli, Validate) {
  EXPECT_EQ(run({"validate", data("clique4.json")}).code, 0);
  const CliRun bad = run({"validate", data("demand_in_side.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out, "receiver 2")) << bad.out;
  EXPECT_EQ(run({"validate", data("malformed.json")}).code, 2);
  EXPECT_EQ(run({"validate", data("no_such_file.json")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, SearchClique) {
  const CliRun r = run({"search", data("clique4.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(data("golden/search_clique4.txt")));
  EXPECT_TRUE(has(run({"search", data("clique3.json"), "--method", "brute"}).out, "N = 3"));
}

TEST(Cli, SearchWritesGenerator) {
  const auto path = std::filesystem::temp_directory_path() / "icsie_cli_search_out.json";
  const CliRun r = run({"search", data("clique4.json"), "--method", "brute", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  const auto g = icsie::parse_generator(slurp(path.string()));
  EXPECT_EQ(g.rows(), 4u);
  EXPECT_EQ(g.cols(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, SearchNinePacketAndBudgets) {
  const CliRun brute = run({"search", data("nine_packet.json"), "--method", "brute"});
  EXPECT_EQ(brute.code, 0);
  EXPECT_TRUE(has(brute.out, "N = 5"));
  EXPECT_EQ(run({"search", data("nine_packet.json"), "--method", "minrank"}).code, 3);
  EXPECT_EQ(run({"--node-limit", "2", "search", data("nine_packet.json"), "--method", "brute"}).code, 3);
  EXPECT_EQ(run({"search", data("clique4_dc1.json"), "--method", "minrank"}).code, 1);
  const CliRun dc = run({"search", data("clique4_dc1.json")});
  EXPECT_EQ(dc.code, 0);
  EXPECT_TRUE(has(dc.err, "minrank skipped"));
  EXPECT_EQ(run({"search", data("clique4.json"), "--method", "guess"}).code, 2);
}

TEST(Cli, Encode) {
  const CliRun r = run({"encode", data("nine_packet.json"), data("nine_packet_g.json"), "--x", "1,1,1,1,0,0,0,0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(data("golden/encode_nine_packet.txt")));
  EXPECT_EQ(run({"encode", data("nine_packet.json"), data("nine_packet_g.json"), "--x", "1,1"}).code, 2);
  const CliRun j = run({"--json", "encode", data("nine_packet.json"), data("nine_packet_g.json"), "--x", "1,1,1,1,0,0,0,0,1"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["y"], nlohmann::json::parse("[0,1,1,0,1,0]"));
}

TEST(Cli, DecodeScenario) {
  const CliRun r = run({"decode", data("nine_packet.json"), data("nine_packet_g.json"), "--scenario",
                     data("nine_packet_scenario.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(data("golden/decode_nine_packet.txt")));
  EXPECT_TRUE(has(r.out, "receiver 9: x_9 = 1 (correct)"));
}

TEST(Cli, DecodeFlags) {
  const std::vector<std::string> base = {"decode", data("nine_packet.json"), data("nine_packet_g.json"),
                                         "--y", "0,1,1,0,1,0"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  const CliRun truth = with({"--truth", "1,1,1,1,0,0,0,0,1"});
  EXPECT_EQ(truth.code, 0);
  EXPECT_FALSE(has(truth.out, "WRONG"));
  const CliRun forced = with({"--xhat", "9=1,1,0,0,0,1", "--force", "9=0,0,1,1,1,0"});
  EXPECT_EQ(forced.code, 0) << forced.err;
  EXPECT_TRUE(has(forced.out, "x_9 = 1"));
  EXPECT_EQ(with({"--xhat", "10=1"}).code, 2);
  EXPECT_EQ(with({"--xhat", "9=1,1,0,0,0,1", "--force", "9=1,0,0,0,0,0"}).code, 1);
  const CliRun overridden = run({"decode", data("nine_packet.json"), data("nine_packet_g.json"), "--y", "1,1,1,1,1,1",
                              "--scenario", data("nine_packet_scenario.json")});
  EXPECT_TRUE(has(overridden.err, "warning"));
  EXPECT_TRUE(has(overridden.out, "x_9 = 1 (correct)"));
}

TEST(Cli, DecodeJson) {
  const CliRun r = run({"--json", "decode", data("nine_packet.json"), data("nine_packet_g.json"), "--scenario",
                     data("nine_packet_scenario.json")});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  // Only receiver 9 has a cache in the scenario file.
  ASSERT_EQ(doc["receivers"].size(), 1u);
  EXPECT_EQ(doc["receivers"][0]["value"], 1);
  EXPECT_EQ(doc["receivers"][0]["correct"], true);
}

TEST(Cli, Analyze) {
  const CliRun c4 = run({"analyze", data("clique4.json")});
  EXPECT_EQ(c4.code, 0);
  EXPECT_EQ(c4.out, slurp(data("golden/analyze_clique4.txt")));
  EXPECT_TRUE(has(run({"analyze", data("two_cycle.json")}).out, "acyclic: N_opt = n = 2"));
  const CliRun dc = run({"analyze", data("clique4_dc1.json")});
  EXPECT_EQ(dc.code, 0);
  EXPECT_TRUE(has(dc.out, "sandwich: [N+2, l_2(N,3)] = [5, 6]")) << dc.out;
  const CliRun j = run({"--json", "analyze", data("clique4.json")});
  EXPECT_TRUE(nlohmann::json::parse(j.out).is_object());
}

TEST(Cli, Simulate) {
  const CliRun ok = run({"simulate", data("nine_packet.json"), data("nine_packet_g.json"), "--exhaustive"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, slurp(data("golden/simulate_nine_packet.txt")));
  const CliRun bad = run({"simulate", data("clique4.json"), data("clique4_broken_g.json"), "--exhaustive"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out, "result: FAIL"));
  EXPECT_TRUE(has(bad.out, "failure: receiver"));
  EXPECT_EQ(run({"simulate", data("clique4.json"), data("nine_packet_g.json")}).code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"simulate", data("nine_packet.json"), data("nine_packet_g.json"), "--trials",
                                         "40", "--seed", "9"};
  EXPECT_EQ(run(args).out, run(args).out);
}
