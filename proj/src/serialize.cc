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

#include "peelfw/serialize.h"

#include <algorithm>
#include <string>

namespace peelfw {

Json RationalJson(const Rational& r) { return ToString(r); }

Json RationalArrayJson(std::span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& r : values) out.push_back(RationalJson(r));
  return out;
}

Json IndexedJson(std::span<const Rational> values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[std::to_string(i)] = RationalJson(values[i]);
  }
  return out;
}

Json IndexedJson(std::span<const double> values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[std::to_string(i)] = values[i];
  }
  return out;
}

Json DecompositionJson(const DenseDecomposition& d, const SetFunction& f) {
  Json blocks = Json::array();
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    std::vector<int> labels;
    for (int p : d.blocks[i]) labels.push_back(f.labels()[p]);
    std::sort(labels.begin(), labels.end());
    Json block;
    block["elements"] = labels;
    block["density"] = RationalJson(d.densities[i]);
    blocks.push_back(std::move(block));
  }
  Json out;
  out["variant"] = ToString(d.variant);
  out["blocks"] = std::move(blocks);
  return out;
}

Json GreedyPPJson(const GreedyPPResult& r) {
  Json out;
  out["best_set"] = r.best_set;
  out["best_density"] = RationalJson(r.best_density);
  out["iterations"] = r.iterations;
  out["loads"] = RationalArrayJson(r.loads);
  out["b"] = r.b;
  return out;
}

}  // namespace peelfw
