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

#include "peelfw/invariants.h"

#include <functional>
#include <limits>
#include <random>
#include <set>

#include "peelfw/decomp.h"
#include "peelfw/errors.h"
#include "peelfw/frank_wolfe.h"
#include "peelfw/peel.h"
#include "peelfw/polytope.h"
#include "peelfw/setfn.h"
#include "peelfw/treepack.h"

namespace peelfw {

namespace {

constexpr unsigned kSeed = 20240611;

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome Pass(std::string detail = "") { return {true, std::move(detail)}; }
Outcome Fail(std::string detail) { return {false, std::move(detail)}; }

class Suite {
 public:
  void Run(const std::string& name, bool applicable,
           const std::string& skip_reason,
           const std::function<Outcome()>& body) {
    if (!applicable) {
      results_.push_back({name, CheckStatus::kSkipped, skip_reason});
      return;
    }
    try {
      Outcome o = body();
      results_.push_back(
          {name, o.ok ? CheckStatus::kPass : CheckStatus::kFail, o.detail});
    } catch (const std::exception& e) {
      results_.push_back({name, CheckStatus::kFail, e.what()});
    }
  }

  std::vector<CheckResult> Take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

RationalVector RandomWeights(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(0, 20);
  std::uniform_int_distribution<int> den(1, 4);
  RationalVector w;
  for (int i = 0; i < n; ++i) w.emplace_back(num(rng), den(rng));
  return w;
}

Outcome EdmondsOptimality(const SetFunction& f, std::mt19937& rng) {
  const auto vertices = EnumerateBaseVertices(f, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalVector w = RandomWeights(rng, f.ground_size());
    const RationalVector s = LinearMinimizer(f, std::span<const Rational>(w));
    Rational best = Dot(vertices.front(), w);
    for (const auto& v : vertices) best = std::min(best, Dot(v, w));
    if (Dot(s, w) != best) return Fail("LMO value above vertex minimum");
  }
  return Pass();
}

Outcome DoubleDual(const SetFunction& f) {
  const SetFunction back = Dualize(Dualize(f));
  const int n = f.ground_size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset s = SubsetFromMask(n, mask);
    if (back(s) != f(s)) return Fail("dual of dual differs");
  }
  return Pass();
}

Outcome Certificate(const SetFunction& f) {
  const RationalVector b = DensityVector(f);
  if (!VerifyBase(f, b)) return Fail("density vector is not a base");
  if (!CertifyLexOptimal(f, b)) return Fail("first-order certificate fails");
  if (!IsLexExtreme(f, b)) return Fail("not lexicographically extreme");
  return Pass();
}

}  // namespace

std::string ToString(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

std::vector<CheckResult> RunInvariantSuite(const MultiGraph& g) {
  Suite suite;
  std::mt19937 rng(kSeed);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const SetFunction edges = EdgeCountFunction(g);
  const SetFunction rank = GraphicRankFunction(g);
  const bool connected = IsConnected(g);

  suite.Run("setfn.edge_count_supermodular", n <= 12, "n > 12", [&] {
    if (!CheckDeclaredModularity(edges)) return Fail("inequality violated");
    if (!CheckMonotone(edges) || !CheckNormalized(edges))
      return Fail("not monotone normalized");
    return Pass();
  });
  suite.Run("setfn.graphic_rank_submodular", m <= 12, "m > 12", [&] {
    if (!CheckDeclaredModularity(rank)) return Fail("inequality violated");
    if (!CheckMonotone(rank) || !CheckNormalized(rank))
      return Fail("not monotone normalized");
    return Pass();
  });
  suite.Run("setfn.double_dual", n <= 12 && m <= 12, "ground > 12", [&] {
    Outcome a = DoubleDual(edges);
    return a.ok ? DoubleDual(rank) : a;
  });
  suite.Run("polytope.edmonds_optimality", n <= 6 && m <= 6, "ground > 6", [&] {
    Outcome a = EdmondsOptimality(edges, rng);
    return a.ok ? EdmondsOptimality(rank, rng) : a;
  });
  suite.Run(
      "polytope.lmo_output_is_base", n <= 20 && m <= 20, "ground > 20", [&] {
        for (int trial = 0; trial < 5; ++trial) {
          const RationalVector wv = RandomWeights(rng, n);
          const RationalVector we = RandomWeights(rng, m);
          if (!VerifyBase(edges, LinearMinimizer(
                                     edges, std::span<const Rational>(wv))) ||
              !VerifyBase(rank,
                          LinearMinimizer(rank, std::span<const Rational>(we))))
            return Fail("LMO output outside the base polytope");
        }
        return Pass();
      });
  suite.Run("polytope.orientation_characterization", m <= 10 && n <= 7,
            "m > 10 or n > 7", [&] {
              std::set<RationalVector> induced;
              for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m);
                   ++mask) {
                const RationalVector loads =
                    IntegralOrientation(g, SubsetFromMask(m, mask)).Loads(g);
                if (!VerifyBase(edges, loads))
                  return Fail("orientation load outside B_f");
                induced.insert(loads);
              }
              for (const auto& v : EnumerateBaseVertices(edges, 7)) {
                if (!induced.count(v))
                  return Fail("vertex not induced by an orientation");
              }
              return Pass();
            });
  suite.Run("peel.lmo_additive_error", true, "", [&] {
    const std::int64_t err = g.SumSquaredDegrees();
    std::uniform_int_distribution<std::int64_t> dist(0, 3 * m + 3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> w(n);
      for (auto& x : w) x = dist(rng);
      const RationalVector best =
          OptimalOrientation(g, std::span<const std::int64_t>(w)).loads;
      Rational opt = 0;
      for (int v = 0; v < n; ++v) opt += w[v] * best[v];
      for (std::int64_t scale : {1, 10, 1000}) {
        std::vector<std::int64_t> scaled(w);
        for (auto& x : scaled) x *= scale;
        const PeelResult p = WeightedGreedy(g, scaled);
        Rational got = 0;
        for (int v = 0; v < n; ++v) got += w[v] * p.dhat[v];
        if (scale * got > scale * opt + err)
          return Fail("peel exceeds optimum + sum deg^2 / K");
      }
    }
    return Pass();
  });
  suite.Run("peel.dhat_is_base", n <= 20, "n > 20", [&] {
    const std::vector<std::int64_t> zero(n, 0);
    return VerifyBase(edges, WeightedGreedy(g, zero).dhat)
               ? Pass()
               : Fail("peel marginals are not a base");
  });
  suite.Run("decomp.density_vector_certificate", n <= 7, "n > 7",
            [&] { return Certificate(edges); });
  suite.Run("decomp.rank_density_vector_certificate", m <= 7, "m > 7",
            [&] { return Certificate(rank); });
  suite.Run("decomp.unique_maximal_densest", n <= 16, "n > 16", [&] {
    const auto family = DensityMaximizers(edges);
    if (!IsUnionClosed(family)) return Fail("maximizers not union-closed");
    if (CountInclusionMaximal(family) != 1)
      return Fail("maximal maximizer not unique");
    return Pass();
  });
  suite.Run("decomp.unique_minimal_ratio_set", m <= 16, "m > 16", [&] {
    const auto family = RatioMinimizers(rank);
    if (!IsIntersectionClosed(family))
      return Fail("minimizers not intersection-closed");
    if (CountInclusionMinimal(family) != 1)
      return Fail("minimal minimizer not unique");
    return Pass();
  });
  suite.Run("decomp.deletion_contraction_equivalence", m <= 16, "m > 16", [&] {
    return VerifyDecompositionEquivalence(rank) ? Pass()
                                                : Fail("decompositions differ");
  });
  suite.Run("treepack.ideal_loads_match_tnw_recursion",
            connected && n <= kMaxPartitionVertices && m <= 20,
            "disconnected, n > 10 or m > 20", [&] {
              const RationalVector loads = IdealLoads(g);
              if (loads != IdealLoadsByTnwRecursion(g))
                return Fail("ideal loads differ from TNW recursion");
              if (!VerifyBase(rank, loads))
                return Fail("ideal loads are not a base");
              return Pass();
            });
  suite.Run("fw.curvature_bracket", m <= 10, "m > 10", [&] {
    const auto bracket = CurvatureBounds(g);
    const std::int64_t brute = OrientationCurvatureBruteForce(g);
    if (brute < bracket.lower || brute > bracket.upper)
      return Fail("curvature " + std::to_string(brute) + " outside [" +
                  std::to_string(bracket.lower) + ", " +
                  std::to_string(bracket.upper) + "]");
    return Pass("curvature " + std::to_string(brute));
  });
  suite.Run("fw.greedypp_harmonic_bound", n <= 20, "n > 20", [&] {
    const RationalVector exact = DensityVector(edges);
    double optimum = 0;
    for (const Rational& r : exact) optimum += ToDouble(r * r);
    GreedyPPOptions options;
    options.iterations = 500;
    const GreedyPPResult r = GreedyPlusPlus(g, options);
    const double c_upper = static_cast<double>(CurvatureBounds(g).upper);
    const double delta = ToDouble(DeltaForGraph(g));
    for (const TraceRecord& rec : r.trace.records) {
      if (rec.objective - optimum > HarmonicBound(rec.k, c_upper, delta))
        return Fail("bound violated at k=" + std::to_string(rec.k));
    }
    return Pass();
  });
  return suite.Take();
}

bool AllPassed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (r.status == CheckStatus::kFail) return false;
  }
  return true;
}

}  // namespace peelfw
