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

#include "peelfw/peel.h"

#include <algorithm>
#include <numeric>

namespace peelfw {

namespace {

void CheckIterations(const GreedyPPOptions& options, int dim) {
  if (options.iterations < 1) throw InputError("iterations must be >= 1");
  if (!options.reference.empty() &&
      static_cast<int>(options.reference.size()) != dim) {
    throw InputError("reference vector length does not match ground size");
  }
}

// Appends the trace record for b^(k); returns true when the run should stop.
bool RecordIteration(const GreedyPPOptions& options, int k,
                     std::vector<double>& b, ConvergenceTrace& trace) {
  TraceRecord record{k, SumOfSquares<double>(b), 1.0 / k, std::nullopt};
  if (!options.reference.empty()) {
    record.dist_ref = Distance(b, options.reference);
  }
  trace.records.push_back(record);
  if (options.keep_iterates) trace.iterates.push_back(b);
  return options.stop_within && record.dist_ref &&
         *record.dist_ref <= *options.stop_within;
}

std::vector<int> SortedLabels(const std::vector<int>& positions,
                              const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(labels[p]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PeelResult WeightedSuperGreedy(const SetFunction& f,
                               std::span<const Rational> w) {
  if (f.kind() != Modularity::kSupermodular) {
    throw PreconditionError("weighted supergreedy needs a supermodular oracle");
  }
  const int n = f.ground_size();
  if (static_cast<int>(w.size()) != n) {
    throw InputError("weight vector length does not match ground size");
  }
  PeelResult result;
  result.dhat.resize(n);
  Subset remaining = f.FullSet();
  for (int step = 0; step < n; ++step) {
    const Rational current = f(remaining);
    result.suffix_densities.push_back(current / (n - step));
    int best = -1;
    Rational best_key;
    Rational best_marginal;
    for (auto u = remaining.find_first(); u != Subset::npos;
         u = remaining.find_next(u)) {
      Subset without = remaining;
      without.reset(u);
      Rational marginal = current - f(without);
      Rational key = w[u] + marginal;
      if (best < 0 || key < best_key) {
        best = static_cast<int>(u);
        best_key = std::move(key);
        best_marginal = std::move(marginal);
      }
    }
    result.order.push_back(best);
    result.dhat[best] = best_marginal;
    remaining.reset(best);
  }
  return result;
}

GreedyPPResult GreedyPlusPlus(const MultiGraph& g,
                              const GreedyPPOptions& options) {
  const int n = g.num_vertices();
  CheckIterations(options, n);
  GreedyPPResult result;
  std::vector<std::int64_t> loads(n, 0);
  std::vector<double> b(n, 0.0);
  // Incumbent density best_edges / best_size, compared by cross-multiplying.
  std::int64_t best_edges = g.num_edges();
  std::int64_t best_size = n;
  std::vector<int> best_positions(n);
  std::iota(best_positions.begin(), best_positions.end(), 0);
  GreedyPeeler peeler(g);
  int k = 0;
  while (k < options.iterations) {
    peeler.Peel(std::span<const std::int64_t>(loads));
    const auto& order = peeler.order();
    const auto& dhat = peeler.dhat();
    std::int64_t remaining = g.num_edges();
    int improved_at = -1;
    for (int i = 0; i + 1 < n; ++i) {
      remaining -= dhat[order[i]];
      const std::int64_t size = n - i - 1;
      if (remaining * best_size > best_edges * size) {
        best_edges = remaining;
        best_size = size;
        improved_at = i + 1;
      }
    }
    if (improved_at >= 0) {
      best_positions.assign(order.begin() + improved_at, order.end());
    }
    for (int v = 0; v < n; ++v) loads[v] += dhat[v];
    ++k;
    for (int v = 0; v < n; ++v) b[v] = static_cast<double>(loads[v]) / k;
    if (RecordIteration(options, k, b, result.trace)) break;
  }
  std::sort(best_positions.begin(), best_positions.end());
  result.best_set = best_positions;
  result.best_density = Rational(best_edges) / best_size;
  result.loads.reserve(n);
  for (std::int64_t l : loads) result.loads.emplace_back(l);
  result.b = b;
  result.iterations = k;
  return result;
}

GreedyPPResult SuperGreedyPlusPlus(const SetFunction& f,
                                   const GreedyPPOptions& options) {
  if (f.kind() != Modularity::kSupermodular) {
    throw PreconditionError("supergreedy++ needs a supermodular oracle");
  }
  const int n = f.ground_size();
  CheckIterations(options, n);
  GreedyPPResult result;
  RationalVector loads(n);
  std::vector<double> b(n, 0.0);
  Rational best_density = f.FullValue() / n;
  std::vector<int> best_positions(n);
  std::iota(best_positions.begin(), best_positions.end(), 0);
  int k = 0;
  while (k < options.iterations) {
    const PeelResult peel =
        WeightedSuperGreedy(f, std::span<const Rational>(loads));
    int improved_at = -1;
    for (int i = 1; i < n; ++i) {
      if (peel.suffix_densities[i] > best_density) {
        best_density = peel.suffix_densities[i];
        improved_at = i;
      }
    }
    if (improved_at >= 0) {
      best_positions.assign(peel.order.begin() + improved_at, peel.order.end());
    }
    for (int v = 0; v < n; ++v) loads[v] += peel.dhat[v];
    ++k;
    for (int v = 0; v < n; ++v) b[v] = ToDouble(loads[v]) / k;
    if (RecordIteration(options, k, b, result.trace)) break;
  }
  result.best_set = SortedLabels(best_positions, f.labels());
  result.best_density = best_density;
  result.loads = std::move(loads);
  result.b = b;
  result.iterations = k;
  return result;
}

}  // namespace peelfw
