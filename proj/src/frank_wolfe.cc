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

#include "peelfw/frank_wolfe.h"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>

namespace peelfw {

StepRule ParseStepRule(std::string_view name) {
  if (name == "standard") return StepRule::kStandard;
  if (name == "avg" || name == "averaging") return StepRule::kAveraging;
  throw InputError("unknown step schedule '" + std::string(name) +
                   "' (expected avg or standard)");
}

std::string ToString(StepRule rule) {
  return rule == StepRule::kStandard ? "standard" : "avg";
}

std::string FormatDecimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void ConvergenceTrace::WriteCsv(std::ostream& out) const {
  out << "k,objective,gamma,dist_ref\n";
  for (const TraceRecord& r : records) {
    out << r.k << ',' << FormatDecimal(r.objective) << ','
        << FormatDecimal(r.gamma) << ',';
    if (r.dist_ref) out << FormatDecimal(*r.dist_ref);
    out << '\n';
  }
}

std::optional<int> ConvergenceTrace::FirstWithin(double eps) const {
  for (const TraceRecord& r : records) {
    if (r.dist_ref && *r.dist_ref <= eps) return r.k;
  }
  return std::nullopt;
}

double Distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("distance length mismatch");
  double total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return std::sqrt(total);
}

namespace internal {

void RecordStep(const std::vector<double>& x, int k, double gamma,
                const FrankWolfeOptions& options, ConvergenceTrace& trace) {
  TraceRecord record{k, SumOfSquares<double>(x), gamma, std::nullopt};
  if (!options.reference.empty()) {
    record.dist_ref = Distance(x, options.reference);
  }
  trace.records.push_back(record);
  if (options.keep_iterates) trace.iterates.push_back(x);
}

}  // namespace internal

double HarmonicNumber(int n) {
  double h = 0;
  for (int i = n; i >= 1; --i) h += 1.0 / i;
  return h;
}

double HarmonicBound(int k, double curvature_upper, double delta) {
  return 2.0 * curvature_upper * (1.0 + delta) * HarmonicNumber(k + 1) /
         (k + 1);
}

double StandardBound(int k, double curvature_upper) {
  return 2.0 * curvature_upper / (k + 2);
}

CurvatureBracket CurvatureBounds(const MultiGraph& g) {
  return {2 * static_cast<std::int64_t>(g.num_edges()),
          2 * g.SumSquaredDegrees()};
}

Rational DeltaForGraph(const MultiGraph& g) {
  if (g.num_edges() == 0) throw InputError("delta undefined without edges");
  return Rational(g.SumSquaredDegrees()) / g.num_edges();
}

std::int64_t OrientationCurvatureBruteForce(const MultiGraph& g) {
  const int m = g.num_edges();
  if (m > 12) {
    throw PreconditionError("too many edges for orientation enumeration");
  }
  std::set<std::vector<int>> distinct;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> load(g.num_vertices(), 0);
    for (int e = 0; e < m; ++e) {
      const auto& ed = g.edge(e);
      ++load[(mask >> e) & 1 ? ed.v : ed.u];
    }
    distinct.insert(std::move(load));
  }
  const std::vector<std::vector<int>> loads(distinct.begin(), distinct.end());
  std::int64_t best = 0;
  for (std::size_t a = 0; a < loads.size(); ++a) {
    for (std::size_t b = a + 1; b < loads.size(); ++b) {
      std::int64_t sq = 0;
      for (std::size_t i = 0; i < loads[a].size(); ++i) {
        const std::int64_t d = loads[a][i] - loads[b][i];
        sq += d * d;
      }
      best = std::max(best, 2 * sq);
    }
  }
  return best;
}

}  // namespace peelfw
