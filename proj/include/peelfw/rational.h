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

#ifndef PEELFW_RATIONAL_H_
#define PEELFW_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace peelfw {

// Arbitrary-precision rational. Every set-function value and every
// decomposition density is carried in this type.
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string ToString(const Rational& r) { return r.str(); }

inline double ToDouble(const Rational& r) { return r.convert_to<double>(); }

inline std::vector<double> ToDoubles(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const Rational& r : v) out.push_back(ToDouble(r));
  return out;
}

}  // namespace peelfw

#endif  // PEELFW_RATIONAL_H_
