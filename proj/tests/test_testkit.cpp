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

#include <gtest/gtest.h>

#include <set>

#include "compnet/cuts.hpp"
#include "compnet/testkit.hpp"
#include "json.hpp"

namespace compnet::testkit {
namespace {

constexpr double kTol = 1e-6;

double comm_cut(const X3CInstance& inst) {
  const Reduction red = build_x3c_reduction(inst);
  return min_comm_cut_exact(red.network, red.source, red.sink).value;
}

TEST(Fixtures, EveryExpectationHolds) {
  for (const Fixture& f : fixtures()) {
    ASSERT_FALSE(f.expected.empty()) << f.name;
    for (const Expectation& e : f.expected) {
      EXPECT_NEAR(compute_metric(f, e.metric), e.value, kTol)
          << f.name << " " << e.metric;
    }
  }
}

TEST(Fixtures, LookupAndUnknownNames) {
  const auto names = fixture_names();
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(),
            names.size());
  for (const std::string& name : names) EXPECT_EQ(fixture(name).name, name);
  EXPECT_THROW(fixture("fig2"), ValidationError);
  EXPECT_THROW(compute_metric(fixture("fig1"), "girth"), ValidationError);
}

TEST(Fixtures, ManifestListsEveryFixtureWithProvenance) {
  const auto doc = nlohmann::json::parse(fixture_manifest());
  EXPECT_EQ(doc["format"], "compnet-fixtures/1");
  ASSERT_EQ(doc["fixtures"].size(), fixtures().size());
  const std::set<std::string> labels{"reported", "trivial", "derived"};
  for (const auto& item : doc["fixtures"]) {
    EXPECT_EQ(item["file"], item["name"].get<std::string>() + ".json");
    for (const auto& e : item["expected"]) {
      EXPECT_TRUE(labels.count(e["provenance"].get<std::string>()));
    }
  }
}

TEST(CutOracle, FigureFiveAndSingleLink) {
  const Fixture f = fixture("fig5");
  EXPECT_NEAR(cut_oracle(f.network, 0, 1, CutMode::kJoint).value, 2.0, kTol);

  ComputingNetwork net;
  net.add_node("s", 0);
  net.add_node("u", 1);
  net.add_node("t", 0);
  net.add_link("s", "u", 2.5);
  net.add_link("u", "t", 1.5);
  const CutSolution cut = cut_oracle(net, 0, 2, CutMode::kCommunication);
  EXPECT_NEAR(cut.value, 1.5, kTol);
  EXPECT_EQ(cut.links, std::vector<LinkIndex>{1});
  EXPECT_NEAR(path_cut_oracle(net, 0, 2, CutMode::kCommunication), 1.5, kTol);
}

TEST(X3C, WorkedExample) {
  const X3CInstance inst{2, {{1, 2, 3}, {1, 2, 4}, {3, 5, 6}}, 6};
  EXPECT_TRUE(has_exact_cover(inst));
  const Reduction red = build_x3c_reduction(inst);
  EXPECT_EQ(red.network.num_nodes(), 12u);
  EXPECT_NEAR(comm_cut(inst), 5.0, kTol);
  EXPECT_NEAR(cut_oracle(red.network, red.source, red.sink,
                         CutMode::kCommunication)
                  .value,
              5.0, kTol);
}

TEST(X3C, SingleTriple) {
  const X3CInstance inst{1, {{1, 2, 3}}, 2};
  EXPECT_NEAR(comm_cut(inst), 2.0, kTol);
  const Reduction red = build_x3c_reduction(inst);
  EXPECT_NEAR(cut_oracle(red.network, red.source, red.sink,
                         CutMode::kCommunication)
                  .value,
              2.0, kTol);
}

TEST(X3C, PlantedCoversReachLowerBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int q = 2 + static_cast<int>(seed % 2);
    const X3CInstance inst = planted_x3c(q, 1 + static_cast<int>(seed % 3), seed);
    ASSERT_TRUE(has_exact_cover(inst));
    const double m = static_cast<double>(inst.triples.size());
    EXPECT_NEAR(comm_cut(inst), m + q, kTol) << "seed " << seed;
  }
}

TEST(X3C, NoCoverExceedsLowerBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int q = 2 + static_cast<int>(seed % 2);
    const X3CInstance inst = no_cover_x3c(q, q + 2, seed);
    ASSERT_FALSE(has_exact_cover(inst));
    const double m = static_cast<double>(inst.triples.size());
    EXPECT_GT(comm_cut(inst), m + q + kTol) << "seed " << seed;
  }
}

TEST(X3C, RejectsMalformedInstances) {
  EXPECT_THROW(build_x3c_reduction({1, {{1, 2, 2}}, 2}), ValidationError);
  EXPECT_THROW(build_x3c_reduction({1, {{1, 2, 4}}, 2}), ValidationError);
  EXPECT_THROW(build_x3c_reduction({1, {{1, 2, 3}}, 1}), ValidationError);
  EXPECT_THROW(no_cover_x3c(1, 2, 0), ValidationError);
}

TEST(RandomSmallNetwork, ShapeAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RandomInstance a = random_small_network(seed);
    EXPECT_LE(a.network.num_nodes(), 6u);
    EXPECT_LE(a.network.num_links(), 10u);
    EXPECT_FALSE(a.network.computation_nodes().empty());
    EXPECT_EQ(serialize_network(random_small_network(seed).network),
              serialize_network(a.network));
  }
}

}  // namespace
}  // namespace compnet::testkit
