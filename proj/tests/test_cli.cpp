// Copyright 2026 The compnet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The tool must print what the library computes, nothing more.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "compnet/cuts.hpp"
#include "compnet/flow.hpp"
#include "compnet/generate.hpp"
#include "compnet/interdiction.hpp"
#include "compnet/report.hpp"
#include "compnet/testkit.hpp"
#include "json.hpp"

namespace compnet {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "compnet");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("compnet_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(CliMaxflow, MatchesLibrary) {
  for (const char* name : {"fig1", "fig5", "no-processing", "abilene-joint"}) {
    const testkit::Fixture f = testkit::fixture(name);
    const double expected =
        max_flow(f.network, f.network.node_index(f.source),
                 f.network.node_index(f.sink))
            .value;
    const auto doc = run_json({"maxflow", "--fixture", name});
    EXPECT_EQ(doc["kind"], "maxflow");
    EXPECT_DOUBLE_EQ(doc["value"].get<double>(), expected) << name;
  }
  const Result table = run({"maxflow", "--fixture", "fig1", "--source", "s",
                            "--dest", "t"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("4.000000"), std::string::npos);
}

TEST(CliMincut, MatchesLibrary) {
  const testkit::Fixture fig3 = testkit::fixture("fig3");
  const auto comm = run_json(
      {"mincut", "--fixture", "fig3", "--mode", "comm", "--method", "exact"});
  EXPECT_DOUBLE_EQ(comm["value"].get<double>(),
                   min_comm_cut_exact(fig3.network, 0, 1).value);
  EXPECT_DOUBLE_EQ(comm["value"].get<double>(), 10.0);
  EXPECT_TRUE(comm["verified"].get<bool>());

  const testkit::Fixture fig4 = testkit::fixture("fig4");
  const auto comp = run_json(
      {"mincut", "--fixture", "fig4", "--mode", "comp", "--method", "fast"});
  EXPECT_DOUBLE_EQ(comp["value"].get<double>(),
                   min_computation_cut(fig4.network, 0, 1).value);
  EXPECT_DOUBLE_EQ(comp["value"].get<double>(), 20.0);

  const auto approx = run_json(
      {"mincut", "--fixture", "fig3", "--mode", "joint", "--method", "approx"});
  EXPECT_DOUBLE_EQ(approx["value"].get<double>(),
                   approx_joint_cut(fig3.network, 0, 1).value);
}

TEST(CliInterdict, MatchesLibrary) {
  const auto partial = run_json({"interdict", "--fixture", "fig6", "--budget",
                                 "1.25", "--method", "exact", "--partial"});
  EXPECT_NEAR(partial["residual_flow"].get<double>(), 0.25, 1e-9);

  const testkit::Fixture f = testkit::fixture("fig6");
  const InterdictionProblem p{f.network, 0, 3, 1.25, InterdictionMode::kBinary};
  const auto binary = run_json(
      {"interdict", "--fixture", "fig6", "--budget", "1.25", "--method", "exact"});
  EXPECT_DOUBLE_EQ(binary["residual_flow"].get<double>(),
                   interdict_binary_exact(p).residual_flow);

  const auto zero = run_json(
      {"interdict", "--fixture", "fig1", "--budget", "0", "--method", "greedy"});
  EXPECT_DOUBLE_EQ(zero["residual_flow"].get<double>(), 4.0);
}

TEST(CliSweep, CsvMatchesLibrary) {
  const Result r = run({"sweep", "--fixture", "fig6", "--budgets", "0:1.5:0.25",
                        "--methods", "exact", "--partial"});
  ASSERT_EQ(r.code, 0) << r.err;
  const testkit::Fixture f = testkit::fixture("fig6");
  const InterdictionProblem p{f.network, 0, 3, 0.0, InterdictionMode::kPartial};
  EXPECT_EQ(r.out, sweep_to_csv(budget_sweep(p, budget_grid(0, 1.5, 0.25),
                                             {InterdictionMethod::kExact})));
  std::istringstream lines(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 7);

  const Result empty = run({"sweep", "--fixture", "fig6", "--budgets",
                            "1:0:0.25", "--methods", "exact"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "budget,method,residual_flow,spent,optimal\n");
}

TEST(CliGen, SeededAndWithinRanges) {
  const Result a = run({"gen", "--seed", "7"});
  const Result b = run({"gen", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const ComputingNetwork net = load_network(a.out);
  RandomNetworkSpec spec;
  spec.seed = 7;
  EXPECT_EQ(serialize_network(net),
            serialize_network(gen_random(abilene_topology(), spec)));
  for (const Link& l : net.links()) {
    EXPECT_GT(l.capacity, 0.0);
    EXPECT_LT(l.capacity, 1.0);
  }
}

TEST(CliNetworkFile, RoundTripThroughExport) {
  const auto dir = temp_dir();
  const Result exported =
      run({"fixtures", "export", "--dir", dir.string()});
  ASSERT_EQ(exported.code, 0) << exported.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "manifest.json"));
  const auto doc = run_json({"maxflow", "--network", (dir / "fig1.json").string(),
                             "--source", "s", "--dest", "t"});
  EXPECT_DOUBLE_EQ(doc["value"].get<double>(), 4.0);
  const Result check = run({"fixtures", "check", "--dir", dir.string()});
  EXPECT_EQ(check.code, 0) << check.out << check.err;

  // A tampered capacity must be caught.
  auto doc_fig1 = nlohmann::json::parse(std::ifstream(dir / "fig1.json"));
  doc_fig1["links"][0]["capacity"] = 0.5;
  std::ofstream(dir / "fig1.json") << doc_fig1.dump();
  const Result tampered = run({"fixtures", "check", "--dir", dir.string()});
  EXPECT_NE(tampered.code, 0);
  EXPECT_NE(tampered.out.find("FAIL fig1 max_flow"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(CliErrors, NonzeroExitWithDiagnostic) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{
           {"maxflow", "--fixture", "nope"},
           {"maxflow", "--network", "/nonexistent/file.json"},
           {"maxflow"},
           {"interdict", "--fixture", "fig1", "--budget", "-1"},
           {"mincut", "--fixture", "fig1", "--mode", "sideways"},
           {"sweep", "--fixture", "fig6", "--budgets", "0:1", "--methods", "exact"},
           {"frobnicate"}}) {
    const Result r = run(args);
    EXPECT_NE(r.code, 0) << args[0];
    EXPECT_FALSE(r.err.empty()) << args[0];
  }
}

}  // namespace
}  // namespace compnet
