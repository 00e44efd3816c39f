// Copyright 2026 The Authors.
//
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

#include "peelfw/graph.h"

#include <gtest/gtest.h>

#include <random>

#include "test_graphs.h"

namespace peelfw {
namespace {

using testing::RandomGraph;

TEST(MultiGraphTest, DegreesCountParallelEdges) {
  const MultiGraph g(3, {{0, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.Degree(0), 2);
  EXPECT_EQ(g.Degree(1), 3);
  EXPECT_EQ(g.Degree(2), 1);
  EXPECT_EQ(g.SumSquaredDegrees(), 4 + 9 + 1);
  EXPECT_EQ(g.Opposite(2, 2), 1);
  EXPECT_EQ(g.IncidentEdges(1).size(), 3u);
}

TEST(MultiGraphTest, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_THROW(MultiGraph(2, {{1, 1}}), InputError);
  EXPECT_THROW(MultiGraph(2, {{0, 2}}), InputError);
  EXPECT_THROW(MultiGraph(2, {{-1, 0}}), InputError);
}

TEST(ParseEdgeListTest, SkipsCommentsAndInfersVertexCount) {
  const MultiGraph g = ParseEdgeList("# header\n0 1\n\n  1 4  \n# tail\n");
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edge(1).u, 1);
  EXPECT_EQ(g.edge(1).v, 4);
}

TEST(ParseEdgeListTest, ReportsLineNumbers) {
  try {
    ParseEdgeList("0 1\n2 x\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(ParseEdgeList("0 1\n3 3\n"), InputError);
  EXPECT_THROW(ParseEdgeList("# nothing\n"), InputError);
  EXPECT_THROW(ParseEdgeList("0 1 2\n"), InputError);
}

TEST(ReadEdgeListFileTest, MissingFileIsInputError) {
  EXPECT_THROW(ReadEdgeListFile("/nonexistent/graph.el"), InputError);
}

TEST(ComponentsTest, CountsOverEdgeSubsets) {
  const MultiGraph g = testing::TrianglePendant();
  EXPECT_EQ(CountComponents(g, FullSubset(4)), 1);
  EXPECT_EQ(CountComponents(g, Subset(4)), 4);
  EXPECT_EQ(CountComponents(g, SubsetOf(4, {0, 1})), 2);
  EXPECT_TRUE(IsConnected(g));
  EXPECT_FALSE(IsConnected(MultiGraph(3, {{0, 1}})));
  const auto labels = ComponentLabels(g, SubsetOf(4, {3}));
  EXPECT_EQ(labels[2], labels[3]);
  EXPECT_NE(labels[0], labels[1]);
}

TEST(MinimumSpanningTreeTest, BreaksTiesByEdgeIndex) {
  const MultiGraph g = testing::Triangle();
  const std::vector<int> zero(3, 0);
  EXPECT_EQ(MinimumSpanningTree(g, zero), (std::vector<int>{0, 1}));
  const std::vector<double> w{3, 1, 2};
  EXPECT_EQ(MinimumSpanningTree(g, w), (std::vector<int>{1, 2}));
}

TEST(MinimumSpanningTreeTest, DisconnectedIsPrecondition) {
  const MultiGraph g(4, {{0, 1}, {2, 3}});
  const std::vector<int> zero(2, 0);
  EXPECT_THROW(MinimumSpanningTree(g, zero), PreconditionError);
}

// Property: the tree is spanning, acyclic and no heavier than any spanning
// tree found by exhaustive search.
TEST(MinimumSpanningTreeTest, MatchesExhaustiveSearch) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const MultiGraph g = RandomGraph(rng, n, n - 1 + trial % 4, true);
    std::uniform_int_distribution<int> dist(0, 5);
    std::vector<int> w(g.num_edges());
    for (int& x : w) x = dist(rng);
    const auto tree = MinimumSpanningTree(g, w);
    ASSERT_EQ(static_cast<int>(tree.size()), n - 1);
    EXPECT_EQ(CountComponents(g, tree), 1);
    int weight = 0;
    for (int e : tree) weight += w[e];
    int best = 1 << 30;
    const int m = g.num_edges();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      if (std::popcount(s) != n - 1 || testing::ForestRank(g, s) != n - 1)
        continue;
      int total = 0;
      for (int e = 0; e < m; ++e) {
        if (s >> e & 1) total += w[e];
      }
      best = std::min(best, total);
    }
    EXPECT_EQ(weight, best);
  }
}

TEST(NamedGraphsTest, Shapes) {
  EXPECT_EQ(CompleteGraph(4).num_edges(), 6);
  const MultiGraph star = StarGraph(3);
  EXPECT_EQ(star.num_vertices(), 4);
  EXPECT_EQ(star.Degree(0), 3);
  EXPECT_EQ(PathGraph(3).num_edges(), 2);
}

}  // namespace
}  // namespace peelfw
