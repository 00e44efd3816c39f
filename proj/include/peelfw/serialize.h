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

#ifndef PEELFW_SERIALIZE_H_
#define PEELFW_SERIALIZE_H_

#include <span>
#include <vector>

#include "json.hpp"
#include "peelfw/decomp.h"
#include "peelfw/peel.h"
#include "peelfw/rational.h"
#include "peelfw/setfn.h"

namespace peelfw {

using Json = nlohmann::ordered_json;

// Rationals are written as "p/q" strings in lowest terms ("p" for integers).
Json RationalJson(const Rational& r);
Json RationalArrayJson(std::span<const Rational> values);

// {"0": value, "1": value, ...} keyed by element index.
Json IndexedJson(std::span<const Rational> values);
Json IndexedJson(std::span<const double> values);

// {"variant": ..., "blocks": [{"elements": [...], "density": "p/q"}, ...]}
// with element labels taken from f.
Json DecompositionJson(const DenseDecomposition& d, const SetFunction& f);

// {"best_set": [...], "best_density": "p/q", "iterations": T, ...}
Json GreedyPPJson(const GreedyPPResult& r);

}  // namespace peelfw

#endif  // PEELFW_SERIALIZE_H_
