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

#ifndef COPSEARCH_SOLVER_HPP_
#define COPSEARCH_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "copsearch/arena.hpp"
#include "copsearch/certificate.hpp"
#include "copsearch/digraph.hpp"

namespace copsearch {

inline constexpr std::uint64_t kDefaultTransitionBudget = 50'000'000;

// The search gave up before reaching a verdict. Never a game result.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

struct SolveOptions {
  // Upper bound on arena transitions examined by a single solve call.
  std::uint64_t max_transitions = kDefaultTransitionBudget;
};

enum class Winner { kCops, kRobber };

struct Outcome {
  Winner winner = Winner::kRobber;
  // Present iff winner == kCops.
  std::optional<Certificate> certificate;
  // Arena transitions examined.
  std::uint64_t states_explored = 0;
};

// Visible fast robber with k cops. Solved by a rank-by-rank cop attractor on
// the explicit arena of positions (C, r); in monotone mode a cop move is
// only admissible if no robber reply enlarges the robber's territory.
// Requires 0 <= k <= n.
Outcome solve_visible(const Digraph& d, int k, Confinement confinement,
                      bool monotone, const SolveOptions& options = {});

// Invisible robber with k cops: breadth-first search over contamination
// states from (empty, V). Cops win iff the empty contamination is
// reachable; in monotone mode only non-growing transitions are allowed.
Outcome solve_invisible(const Digraph& d, int k, Agility agility,
                        bool monotone, const SolveOptions& options = {});

Outcome solve(const Digraph& d, const GameVariant& variant, int k,
              bool monotone, const SolveOptions& options = {});

struct CopNumberResult {
  int value = 0;
  Certificate certificate;
  std::uint64_t states_explored = 0;
};

// Smallest k in 0..n at which the cops win, with the witnessing strategy.
CopNumberResult cop_number(const Digraph& d, const GameVariant& variant,
                           bool monotone, const SolveOptions& options = {});

struct GapResult {
  int cop_number = 0;
  int monotone_cop_number = 0;
  int gap = 0;
  // monotone / plain; 1.0 for the empty graph.
  double ratio = 1.0;
  Certificate plain_certificate;
  Certificate monotone_certificate;
};

GapResult gap(const Digraph& d, const GameVariant& variant,
              const SolveOptions& options = {});

struct VerifyResult {
  bool valid = false;
  // First violating transition when invalid.
  std::string diagnostic;
  explicit operator bool() const { return valid; }
};

// Replays a certificate against the rules in arena.hpp. Throws
// CertificateError on fingerprint mismatch or a kind/variant mismatch.
VerifyResult verify_certificate(const Digraph& d, const Certificate& cert);

}  // namespace copsearch

#endif  // COPSEARCH_SOLVER_HPP_
