#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "pairbot/analysis.hpp"
#include "pairbot/trace.hpp"

namespace pairbot::cli {
namespace {

const std::string kFixtures = PAIRBOT_FIXTURES_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pairbot");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pairbot_test_" + name)).string();
}

TEST(Cli, MarchingGoldenTrace) {
  const Result r = cli({"run", fixture("march2.json"), "--scheduler", "fsync", "--max-events", "10",
                        "--checks", "line-formed,safety,progress"});
  ASSERT_EQ(r.code, kExitClean) << r.err;
  EXPECT_EQ(r.out, slurp(fixture("golden/march2_fsync10.jsonl")));
}

TEST(Cli, SeedDoesNotMatterForFsync) {
  const Result a = cli({"run", fixture("march2.json"), "-n", "10", "--seed", "1"});
  const Result b = cli({"run", fixture("march2.json"), "-n", "10", "--seed", "2"});
  std::istringstream ia(a.out), ib(b.out);
  const Trace ta = read_jsonl(ia), tb = read_jsonl(ib);
  EXPECT_EQ(ta.events, tb.events);
}

TEST(Cli, CoatingAsyncSolves) {
  const std::string out = temp_path("coat.jsonl");
  const Result r = cli({"run", fixture("cavity_pocket20.json"), "--scheduler", "async-random",
                        "--seed", "7", "--max-events", "61000", "--checks", "safety,coating",
                        "--out", out});
  ASSERT_EQ(r.code, kExitClean) << r.err;
  const Trace t = load_trace(out);
  EXPECT_TRUE(t.summary.terminated);
  EXPECT_TRUE(t.summary.checks.at("coating"));
  ASSERT_TRUE(t.header.coating.has_value());
  EXPECT_EQ(t.header.coating->size(), 18u);

  const Result check = cli({"check", out, "--checks", "coating,safety"});
  EXPECT_EQ(check.code, kExitClean);
  const auto j = nlohmann::json::parse(check.out);
  EXPECT_TRUE(j["checks"]["coating"].get<bool>());

  const Result last = cli({"render", out, "--frame", "last", "--no-color"});
  EXPECT_EQ(last.code, kExitClean);
  EXPECT_EQ(last.out.find('+'), std::string::npos);
  const Result again = cli({"render", out, "--frame", "last", "--no-color"});
  EXPECT_EQ(last.out, again.out);
  std::remove(out.c_str());
}

TEST(Cli, CoatingBudgetExhausted) {
  const Result r = cli({"run", fixture("hex14.json"), "--max-events", "5", "--checks", "coating"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_EQ(cli({"run", fixture("hex14.json"), "--max-events", "5"}).code, kExitBudget);
  EXPECT_EQ(cli({"run", fixture("hex14.json"), "--max-events", "520"}).code, kExitClean);
}

TEST(Cli, SafetyViolationExitCode) {
  // Marching ignores the object and walks into it.
  const std::string scene = temp_path("wall.json");
  std::ofstream(scene) << R"({"pairs": [{"a": [0, 0], "b": [0, 0]}], "object": [[2, 0]]})";
  const Result r = cli({"run", scene, "-a", "marching", "-n", "10"});
  EXPECT_EQ(r.code, kExitViolation);
  std::remove(scene.c_str());
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(cli({"run", fixture("odd_robots.json")}).code, kExitInput);
  const Result missing = cli({"run", fixture("odd_robots.json")});
  EXPECT_NE(missing.err.find("pairs[1].b"), std::string::npos) << missing.err;
  EXPECT_EQ(cli({"run", "/nonexistent.json"}).code, kExitInput);
  EXPECT_EQ(cli({"run", fixture("march2.json"), "--scheduler", "lockstep"}).code, kExitInput);
  EXPECT_EQ(cli({"run", fixture("march2.json"), "--checks", "vibes"}).code, kExitInput);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(cli({}).code, kExitInput);
}

TEST(Cli, Help) {
  const Result r = cli({"--help"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_NE(r.out.find("explore"), std::string::npos);
}

TEST(Cli, AsyncExhaustiveRunsTheExplorer) {
  const Result r = cli({"run", fixture("march2.json"), "--scheduler", "async-exhaustive", "--depth",
                        "10", "--checks", "line-formed"});
  ASSERT_EQ(r.code, kExitClean) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["predicate_violations"].get<int>(), 0);
  EXPECT_EQ(j["depth_reached"].get<int>(), 10);
  const Result capped = cli({"run", fixture("hex14.json"), "--scheduler", "async-exhaustive",
                             "--depth", "4"});
  EXPECT_EQ(capped.code, kExitInput);
  EXPECT_NE(capped.err.find("--max-pairs"), std::string::npos);
}

TEST(Cli, ExploreReportsCounterexamples) {
  const Result ok = cli({"explore", fixture("march3.json"), "--depth", "12", "--jobs", "2"});
  EXPECT_EQ(ok.code, kExitClean) << ok.err;
  const Result bad = cli({"explore", fixture("march2.json"), "--depth", "3", "--predicate", "false"});
  EXPECT_EQ(bad.code, kExitViolation);
  const auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j["counterexamples"].empty());
  const Result budget = cli({"explore", fixture("march3.json"), "--depth", "30", "--max-states", "10"});
  EXPECT_EQ(budget.code, kExitBudget);
}

TEST(Cli, Analyze) {
  const auto dot = nlohmann::json::parse(cli({"analyze", fixture("dot.json")}).out);
  EXPECT_EQ(dot["surface"].size(), 6u);
  const auto pocket = nlohmann::json::parse(cli({"analyze", fixture("pocket14.json")}).out);
  EXPECT_EQ(pocket["nonCoating"], nlohmann::json::parse("[[5, 0]]"));
  const auto hex = nlohmann::json::parse(cli({"analyze", fixture("hex14.json")}).out);
  EXPECT_TRUE(hex["nonCoating"].empty());
  EXPECT_EQ(hex["coating"], hex["surface"]);
  EXPECT_EQ(cli({"analyze", fixture("march2.json")}).code, kExitInput);
  EXPECT_EQ(cli({"analyze", fixture("dot.json"), "--disjointness", "weird"}).code, kExitInput);
  const Result edge = cli({"analyze", fixture("pocket14.json"), "--disjointness", "edge", "--sources",
                           "per-robot", "--margin", "6"});
  EXPECT_EQ(edge.code, kExitClean);
}

TEST(Cli, RenderFrames) {
  const std::string out = temp_path("march.jsonl");
  ASSERT_EQ(cli({"run", fixture("march2.json"), "-n", "4", "-o", out}).code, kExitClean);
  const Result zero = cli({"render", out, "--frame", "0", "--no-color"});
  EXPECT_EQ(zero.code, kExitClean);
  EXPECT_EQ(std::count(zero.out.begin(), zero.out.end(), '8'), 2);
  const Result far = cli({"render", out, "--frame", "99"});
  EXPECT_EQ(far.code, kExitInput);
  EXPECT_NE(far.err.find("0..4"), std::string::npos) << far.err;
  const Result svg = cli({"render", out, "--format", "svg"});
  EXPECT_NE(svg.out.find("</svg>"), std::string::npos);
  std::remove(out.c_str());
}

}  // namespace
}  // namespace pairbot::cli
