// Copyright 2026 The copsearch Authors
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

#include <stdexcept>
#include <string>

#include "copsearch/lab.hpp"

namespace copsearch {

namespace {

struct FamilyMember {
  GameVariant variant;
  int k;
  const char* edge_list;
};

// Instances whose gap has been machine-checked with this solver.
constexpr FamilyMember kMembers[] = {
    {GameVariant::visible(), 0, ""},
};

}  // namespace

int counterexample_family_size(const GameVariant& variant) {
  int best = 0;
  for (const FamilyMember& m : kMembers) {
    if (m.variant == variant) best = std::max(best, m.k);
  }
  return best;
}

Digraph counterexample_family(int k, const GameVariant& variant) {
  validate(variant);
  if (k < 1) {
    throw std::invalid_argument("counterexample family index must be >= 1");
  }
  for (const FamilyMember& m : kMembers) {
    if (m.variant == variant && m.k == k) return parse_edge_list(m.edge_list);
  }
  throw std::out_of_range("no counterexample member with gap " +
                          std::to_string(k) + " is available for variant " +
                          variant_name(variant));
}

}  // namespace copsearch
