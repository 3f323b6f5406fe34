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

#include "copsearch/solver.hpp"

namespace copsearch {

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("state budget of " + std::to_string(budget) +
                         " arena transitions exceeded"),
      budget_(budget) {}

Outcome solve(const Digraph& d, const GameVariant& variant, int k,
              bool monotone, const SolveOptions& options) {
  validate(variant);
  if (variant.visibility == Visibility::kVisible) {
    return solve_visible(d, k, variant.confinement, monotone, options);
  }
  return solve_invisible(d, k, variant.agility, monotone, options);
}

CopNumberResult cop_number(const Digraph& d, const GameVariant& variant,
                           bool monotone, const SolveOptions& options) {
  validate(variant);
  CopNumberResult result;
  for (int k = 0; k <= d.vertex_count(); ++k) {
    Outcome outcome = solve(d, variant, k, monotone, options);
    result.states_explored += outcome.states_explored;
    if (outcome.winner == Winner::kCops) {
      result.value = k;
      result.certificate = std::move(*outcome.certificate);
      return result;
    }
  }
  // Cops on every vertex capture at once, so this is unreachable.
  throw std::logic_error("no winning cop budget up to n");
}

GapResult gap(const Digraph& d, const GameVariant& variant,
              const SolveOptions& options) {
  CopNumberResult plain = cop_number(d, variant, false, options);
  CopNumberResult mono = cop_number(d, variant, true, options);
  GapResult result;
  result.cop_number = plain.value;
  result.monotone_cop_number = mono.value;
  result.gap = mono.value - plain.value;
  result.ratio = plain.value == 0
                     ? 1.0
                     : static_cast<double>(mono.value) / plain.value;
  result.plain_certificate = std::move(plain.certificate);
  result.monotone_certificate = std::move(mono.certificate);
  return result;
}

}  // namespace copsearch
