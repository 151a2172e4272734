/*
Copyright 2026 The sdgnet Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sdgnet/dag.hpp"
#include "sdgnet/error.hpp"
#include "test_support.hpp"

namespace sdgnet {
namespace {

using testing::code;
using testing::pair;

Interaction edge(const char* a, const char* b, int score = 3) {
  return Interaction{pair(a, b), InteractionScore(score), "", "", {}, {}};
}

std::vector<Target> targets_of(std::initializer_list<const char*> codes) {
  std::vector<Target> out;
  for (const char* c : codes) out.push_back({code(c), c});
  return out;
}

TEST(Orient, CanonicalOrderPointsLowToHigh) {
  const GraphSnapshot g(targets_of({"2.1", "1.1"}), {edge("2.1", "1.1")});
  const Dag dag = orient_canonical(g);
  ASSERT_EQ(dag.edges.size(), 1u);
  EXPECT_EQ(dag.nodes[dag.edges[0].from], code("1.1"));
  EXPECT_EQ(dag.nodes[dag.edges[0].to], code("2.1"));
}

TEST(Orient, TriangleBecomesTransitive) {
  const GraphSnapshot g(targets_of({"1.1", "1.2", "1.3"}),
                        {edge("1.1", "1.2"), edge("1.2", "1.3"), edge("1.1", "1.3")});
  const std::vector<TargetCode> order{code("1.3"), code("1.1"), code("1.2")};
  const Dag dag = orient_acyclic(g, order);
  EXPECT_FALSE(testing::has_cycle(dag));
  EXPECT_EQ(topological_sort(dag), order);
}

TEST(Orient, OrderMustCoverEveryNodeOnce) {
  const GraphSnapshot g(targets_of({"1.1", "1.2"}), {edge("1.1", "1.2")});
  const std::vector<TargetCode> missing{code("1.1")};
  EXPECT_THROW(orient_acyclic(g, missing), Error);
  const std::vector<TargetCode> repeated{code("1.1"), code("1.2"), code("1.1")};
  EXPECT_THROW(orient_acyclic(g, repeated), Error);
  const std::vector<TargetCode> extra{code("9.9"), code("1.2"), code("1.1")};
  EXPECT_NO_THROW(orient_acyclic(g, extra));
}

TEST(Orient, RandomOrdersAlwaysYieldAcyclicGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testing::random_graph(rng, 2 + trial % 40, 0.4);
    std::vector<TargetCode> order;
    for (const auto& t : g.targets()) order.push_back(t.code);
    std::shuffle(order.begin(), order.end(), rng);
    const Dag dag = orient_acyclic(g, order);
    ASSERT_EQ(dag.edges.size(), g.interactions().size());
    ASSERT_FALSE(testing::has_cycle(dag));
    const auto topo = topological_sort(dag);
    ASSERT_EQ(topo.size(), dag.nodes.size());
    std::map<TargetCode, std::size_t> position;
    for (std::size_t i = 0; i < topo.size(); ++i) position[topo[i]] = i;
    for (const auto& e : dag.edges) {
      ASSERT_LT(position[dag.nodes[e.from]], position[dag.nodes[e.to]]);
    }
  }
}

TEST(TopologicalSort, ChainAndEmpty) {
  const GraphSnapshot g(targets_of({"1.1", "1.2", "1.3"}), {edge("1.1", "1.2"), edge("1.2", "1.3")});
  EXPECT_EQ(topological_sort(orient_canonical(g)),
            (std::vector<TargetCode>{code("1.1"), code("1.2"), code("1.3")}));
  EXPECT_TRUE(topological_sort(Dag{}).empty());
}

TEST(TopologicalSort, HandBuiltCycleIsReported) {
  Dag dag;
  dag.nodes = {code("1.1"), code("1.2")};
  dag.edges.push_back({0, 1, edge("1.1", "1.2")});
  dag.edges.push_back({1, 0, edge("1.1", "1.2")});
  try {
    topological_sort(dag);
    FAIL() << "expected a cycle error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Cycle);
  }
}

TEST(LongestPath, ChainOfThree) {
  const GraphSnapshot g(targets_of({"1.1", "1.2", "1.3"}), {edge("1.1", "1.2"), edge("1.2", "1.3")});
  const PathResult p = longest_positive_path(g);
  EXPECT_EQ(p.edge_count, 2u);
  EXPECT_EQ(p.nodes, (std::vector<TargetCode>{code("1.1"), code("1.2"), code("1.3")}));
}

TEST(LongestPath, EmptyAndEdgeless) {
  EXPECT_EQ(longest_positive_path(GraphSnapshot{}), PathResult{});
  EXPECT_EQ(longest_path(Dag{}), PathResult{});
  Dag lonely;
  lonely.nodes = {code("1.2"), code("1.1")};
  const PathResult p = longest_path(lonely);
  EXPECT_EQ(p.edge_count, 0u);
}

TEST(LongestPath, NegativeEdgesBreakTheChain) {
  const GraphSnapshot g(targets_of({"1.1", "1.2", "1.3", "1.4"}),
                        {edge("1.1", "1.2"), edge("1.2", "1.3"), edge("1.3", "1.4", -1)});
  // 1.3 and 1.4 are ugly, so only 1.1-1.2 remains.
  const PathResult p = longest_positive_path(g);
  EXPECT_EQ(p.edge_count, 1u);
}

TEST(LongestPath, PolicyWidensTheSubgraph) {
  const GraphSnapshot g(targets_of({"1.1", "1.2", "1.3"}), {edge("1.1", "1.2"), edge("1.2", "1.3", 0)});
  EXPECT_EQ(longest_positive_path(g, {.policy = BeautyPolicy::StrictPositive}).edge_count, 0u);
  EXPECT_EQ(longest_positive_path(g, {.policy = BeautyPolicy::NonNegative}).edge_count, 2u);
}

TEST(LongestPath, MatchesBruteForceOnSmallRandomGraphs) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, size(rng), 0.45, trial % 3 == 0 ? -1 : 1);
    const auto sub = beautiful_subgraph(g);
    const Dag dag = orient_canonical(sub);
    const PathResult dp = longest_path(dag);
    ASSERT_EQ(dp.edge_count, testing::brute_force_longest_path(dag)) << "trial " << trial;
    ASSERT_TRUE(testing::is_simple_path_in(dp, sub)) << "trial " << trial;
    EXPECT_EQ(longest_positive_path(g), dp);
  }
}

TEST(LongestPath, RestartsNeverDoWorse) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_graph(rng, 10, 0.5, 1);
    const PathResult base = longest_positive_path(g);
    const PathResult more = longest_positive_path(g, {.restarts = 16, .seed = 42});
    EXPECT_GE(more.edge_count, base.edge_count);
    EXPECT_TRUE(testing::is_simple_path_in(more, g));
    EXPECT_EQ(more, longest_positive_path(g, {.restarts = 16, .seed = 42}));
  }
}

}  // namespace
}  // namespace sdgnet
