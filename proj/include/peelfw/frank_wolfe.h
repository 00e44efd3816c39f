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

#ifndef PEELFW_FRANK_WOLFE_H_
#define PEELFW_FRANK_WOLFE_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "peelfw/errors.h"
#include "peelfw/graph.h"
#include "peelfw/rational.h"

namespace peelfw {

// kStandard: gamma_k = 2/(k+2). kAveraging: gamma_k = 1/(k+1), which makes
// the iterate the running mean of the oracle outputs.
enum class StepRule { kStandard, kAveraging };

StepRule ParseStepRule(std::string_view name);
std::string ToString(StepRule rule);

template <typename Scalar>
Scalar StepSize(StepRule rule, int k) {
  if (rule == StepRule::kStandard) return Scalar(2) / Scalar(k + 2);
  return Scalar(1) / Scalar(k + 1);
}

struct TraceRecord {
  int k;  // iterate index after the update, 1-based
  double objective;
  double gamma;  // step that produced this iterate
  std::optional<double> dist_ref;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;
  // Filled only when iterate snapshots were requested.
  std::vector<std::vector<double>> iterates;

  // Header `k,objective,gamma,dist_ref`; values with 12 significant digits,
  // dist_ref empty when no reference was supplied.
  void WriteCsv(std::ostream& out) const;

  // First k whose distance to the reference is at most eps.
  std::optional<int> FirstWithin(double eps) const;
};

std::string FormatDecimal(double value);

template <typename Scalar>
double SumOfSquares(std::span<const Scalar> x) {
  Scalar total = 0;
  for (const Scalar& v : x) total += v * v;
  if constexpr (std::is_same_v<Scalar, double>) {
    return total;
  } else {
    return ToDouble(total);
  }
}

double Distance(std::span<const double> a, std::span<const double> b);

template <typename Scalar>
using LinearOracle =
    std::function<std::vector<Scalar>(std::span<const Scalar>)>;

struct FrankWolfeOptions {
  StepRule rule = StepRule::kStandard;
  int iterations = 1;
  bool keep_iterates = false;
  // Trace distances are measured against this vector when it is nonempty.
  std::vector<double> reference;
};

template <typename Scalar>
struct FrankWolfeResult {
  std::vector<Scalar> iterate;
  ConvergenceTrace trace;
};

namespace internal {

template <typename Scalar>
std::vector<double> AsDoubles(const std::vector<Scalar>& x) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return x;
  } else {
    return ToDoubles(x);
  }
}

void RecordStep(const std::vector<double>& x, int k, double gamma,
                const FrankWolfeOptions& options, ConvergenceTrace& trace);

}  // namespace internal

// Frank-Wolfe on min sum x^2 over a polytope given by its linear minimization
// oracle. The gradient is 2x, so the oracle is queried with the iterate
// itself. x0 must be feasible.
//
// With the averaging rule in floating point the iterate is kept as the exact
// running sum of oracle outputs divided by the step count, so
// (k+1) x^{k+1} = k x^k + d^{k+1} holds without accumulated rounding; in
// rational arithmetic the convex combination is already exact.
template <typename Scalar>
FrankWolfeResult<Scalar> FrankWolfe(const LinearOracle<Scalar>& lmo,
                                    std::vector<Scalar> x0,
                                    const FrankWolfeOptions& options) {
  if (options.iterations < 1) throw InputError("iterations must be >= 1");
  if (!options.reference.empty() && options.reference.size() != x0.size()) {
    throw InputError("reference vector length does not match iterate");
  }
  FrankWolfeResult<Scalar> result;
  std::vector<Scalar>& x = result.iterate;
  x = std::move(x0);
  const std::size_t dim = x.size();
  constexpr bool kFloating = std::is_same_v<Scalar, double>;
  const bool running_mean = kFloating && options.rule == StepRule::kAveraging;
  std::vector<Scalar> sum(dim, Scalar(0));
  result.trace.records.reserve(options.iterations);
  for (int k = 0; k < options.iterations; ++k) {
    const Scalar gamma = StepSize<Scalar>(options.rule, k);
    const std::vector<Scalar> d = lmo(std::span<const Scalar>(x));
    if (d.size() != dim) throw InputError("oracle returned wrong dimension");
    if (running_mean) {
      for (std::size_t i = 0; i < dim; ++i) {
        sum[i] += d[i];
        x[i] = sum[i] / Scalar(k + 1);
      }
    } else {
      for (std::size_t i = 0; i < dim; ++i) {
        x[i] = (Scalar(1) - gamma) * x[i] + gamma * d[i];
      }
    }
    std::vector<double> snapshot = internal::AsDoubles(x);
    for (double v : snapshot) {
      if (!std::isfinite(v)) throw NumericError("non-finite iterate");
    }
    double gamma_value;
    if constexpr (kFloating) {
      gamma_value = gamma;
    } else {
      gamma_value = ToDouble(gamma);
    }
    internal::RecordStep(snapshot, k + 1, gamma_value, options, result.trace);
  }
  return result;
}

// H_n = 1 + 1/2 + ... + 1/n.
double HarmonicNumber(int n);

// 2 C (1 + delta) H_{k+1} / (k+1): the objective-gap bound for the averaging
// rule with a (delta C / (k+2))-approximate oracle.
double HarmonicBound(int k, double curvature_upper, double delta);

// 2 C / (k+2): the objective-gap bound for the standard rule, exact oracle.
double StandardBound(int k, double curvature_upper);

struct CurvatureBracket {
  std::int64_t lower;  // 2m
  std::int64_t upper;  // 2 sum_u deg(u)^2
};

// Bracket on the curvature constant of sum x^2 over the orientation polytope.
CurvatureBracket CurvatureBounds(const MultiGraph& g);

// sum_u deg(u)^2 / m.
Rational DeltaForGraph(const MultiGraph& g);

// max over pairs of integral orientations of 2 |s - x|^2, which is the
// curvature constant itself since the maximum of a convex function over a
// polytope is attained at vertices. Requires m <= 12.
std::int64_t OrientationCurvatureBruteForce(const MultiGraph& g);

}  // namespace peelfw

#endif  // PEELFW_FRANK_WOLFE_H_
