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

#include "peelfw/polytope.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "peelfw/setfn.h"
#include "test_graphs.h"

namespace peelfw {
namespace {

RationalVector R(std::initializer_list<int> values) {
  RationalVector out;
  for (int v : values) out.emplace_back(v);
  return out;
}

TEST(LmoTest, GraphicRankPicksLightestTree) {
  const SetFunction r = GraphicRankFunction(testing::Triangle());
  const RationalVector w = R({3, 1, 2});
  EXPECT_EQ(LmoPolymatroid(r, std::span<const Rational>(w)), R({0, 1, 1}));
}

TEST(LmoTest, EdgeCountIndexTieBreak) {
  const SetFunction f = EdgeCountFunction(testing::Triangle());
  const RationalVector w = R({0, 0, 0});
  EXPECT_EQ(LmoContrapolymatroid(f, std::span<const Rational>(w)),
            R({2, 1, 0}));
}

TEST(LmoTest, StarLoadsCenter) {
  const SetFunction f = EdgeCountFunction(StarGraph(3));
  const RationalVector w = R({0, 1, 1, 1});
  EXPECT_EQ(LinearMinimizer(f, std::span<const Rational>(w)), R({3, 0, 0, 0}));
}

TEST(LmoTest, KindMismatchIsPrecondition) {
  const SetFunction f = EdgeCountFunction(testing::Triangle());
  const RationalVector w = R({0, 0, 0});
  EXPECT_THROW(LmoPolymatroid(f, std::span<const Rational>(w)),
               PreconditionError);
  EXPECT_THROW(LmoContrapolymatroid(GraphicRankFunction(testing::Triangle()),
                                    std::span<const Rational>(w)),
               PreconditionError);
}

TEST(GreedyOrderTest, RejectsNonPermutations) {
  const SetFunction f = EdgeCountFunction(testing::Triangle());
  const std::vector<int> repeated{0, 0, 1};
  const std::vector<int> short_order{0, 1};
  EXPECT_THROW(PrefixGreedy(f, repeated), InputError);
  EXPECT_THROW(SuffixGreedy(f, short_order), InputError);
}

TEST(EnumerateBaseVerticesTest, TriangleRankHasThreeTrees) {
  const auto vertices =
      EnumerateBaseVertices(GraphicRankFunction(testing::Triangle()));
  EXPECT_EQ(vertices, (std::vector<RationalVector>{R({0, 1, 1}), R({1, 0, 1}),
                                                   R({1, 1, 0})}));
}

TEST(EnumerateBaseVerticesTest, SizeCap) {
  EXPECT_THROW(EnumerateBaseVertices(EdgeCountFunction(PathGraph(8))),
               PreconditionError);
}

TEST(VerifyBaseTest, Examples) {
  const RationalVector tree_loads(3, Rational(2, 3));
  EXPECT_TRUE(VerifyBase(GraphicRankFunction(testing::Triangle()), tree_loads));
  const SetFunction f = EdgeCountFunction(testing::Triangle());
  EXPECT_FALSE(VerifyBase(f, R({3, 0, 0})));
  EXPECT_TRUE(VerifyBase(f, R({1, 1, 1})));
  EXPECT_FALSE(VerifyBase(f, R({2, 2, -1})));
  EXPECT_FALSE(VerifyBase(f, R({1, 1})));
  const std::vector<double> approx{1.0 + 1e-12, 1.0, 1.0 - 1e-12};
  EXPECT_TRUE(VerifyBaseApprox(f, approx, 1e-9));
}

TEST(OptimalOrientationTest, Examples) {
  const std::vector<int> w{1, 2, 3};
  EXPECT_EQ(
      OptimalOrientation(testing::Triangle(), std::span<const int>(w)).loads,
      R({2, 1, 0}));
  const std::vector<int> star_w{0, 1, 1, 1};
  const auto star =
      OptimalOrientation(StarGraph(3), std::span<const int>(star_w));
  EXPECT_EQ(star.loads, R({3, 0, 0, 0}));
  EXPECT_TRUE(star.orientation.IsValid());
  const std::vector<double> dw{1, 2, 3};
  EXPECT_EQ(
      OptimalOrientationLoads(testing::Triangle(), std::span<const double>(dw)),
      (std::vector<double>{2, 1, 0}));
}

TEST(OrientationTest, FractionalLoads) {
  Orientation o;
  o.shares = {{Rational(1, 2), Rational(1, 2)}, {1, 0}};
  EXPECT_TRUE(o.IsValid());
  EXPECT_EQ(o.Loads(PathGraph(3)),
            (RationalVector{Rational(1, 2), Rational(3, 2), 0}));
  o.shares[1] = {1, 1};
  EXPECT_FALSE(o.IsValid());
}

// Property: the greedy LMO attains the independent minimum (orientation
// closed form for edge counts, exhaustive forests for graphic ranks) and
// always returns a base.
TEST(LmoPropertyTest, MatchesOraclesOnRandomInstances) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const MultiGraph g = testing::RandomGraph(rng, n, 1 + trial % 8);
    const SetFunction f = EdgeCountFunction(g);
    const SetFunction r = GraphicRankFunction(g);
    RationalVector wv(n);
    for (auto& x : wv) x = Rational(num(rng), 1 + trial % 3);
    RationalVector we(g.num_edges());
    for (auto& x : we) x = num(rng);
    const RationalVector s = LinearMinimizer(f, std::span<const Rational>(wv));
    EXPECT_EQ(Dot(s, wv), testing::OracleOrientationMin(g, wv));
    EXPECT_TRUE(VerifyBase(f, s));
    const RationalVector t = LinearMinimizer(r, std::span<const Rational>(we));
    EXPECT_EQ(Dot(t, we), testing::OracleForestMin(g, we));
    EXPECT_TRUE(VerifyBase(r, t));
  }
}

// Property: integral orientation loads are bases, and every vertex of the
// base polytope is induced by an integral orientation.
TEST(OrientationPropertyTest, LoadsCoverVertices) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + trial % 4;
    const MultiGraph g = testing::RandomGraph(rng, n, 1 + trial % 6);
    const SetFunction f = EdgeCountFunction(g);
    const int m = g.num_edges();
    std::set<RationalVector> induced;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const RationalVector loads =
          IntegralOrientation(g, SubsetFromMask(m, mask)).Loads(g);
      EXPECT_TRUE(VerifyBase(f, loads));
      induced.insert(loads);
    }
    for (const RationalVector& v : EnumerateBaseVertices(f)) {
      EXPECT_TRUE(induced.count(v));
    }
  }
}

}  // namespace
}  // namespace peelfw
