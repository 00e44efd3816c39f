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

#ifndef PEELFW_SUBSET_H_
#define PEELFW_SUBSET_H_

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

namespace peelfw {

// Membership bitmap over a ground set; bit i is ground position i.
using Subset = boost::dynamic_bitset<>;

inline Subset SubsetFromMask(int size, std::uint64_t mask) {
  return Subset(static_cast<Subset::size_type>(size),
                static_cast<unsigned long>(mask));
}

inline Subset FullSubset(int size) {
  Subset s(static_cast<Subset::size_type>(size));
  s.set();
  return s;
}

inline Subset SubsetOf(int size, const std::vector<int>& members) {
  Subset s(static_cast<Subset::size_type>(size));
  for (int i : members) s.set(static_cast<Subset::size_type>(i));
  return s;
}

inline std::vector<int> Members(const Subset& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace peelfw

#endif  // PEELFW_SUBSET_H_
