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

#include <algorithm>
#include <vector>

#include "copsearch/solver.hpp"

namespace copsearch {

namespace {

void check_budget_arg(const Digraph& d, int k) {
  if (k < 0 || k > d.vertex_count()) {
    throw std::invalid_argument("cop budget " + std::to_string(k) +
                                " outside [0, " +
                                std::to_string(d.vertex_count()) + "]");
  }
}

}  // namespace

// Positions (C, r) are numbered i * n + r where i indexes cop_moves(n, k).
// Round t decides every undecided position from which the cops have a move
// whose replies all land in positions decided in earlier rounds, so the
// round number is the exact capture rank.
Outcome solve_visible(const Digraph& d, int k, Confinement confinement,
                      bool monotone, const SolveOptions& options) {
  check_budget_arg(d, k);
  const int n = d.vertex_count();
  Outcome outcome;
  if (n == 0) {
    Certificate cert;
    cert.variant = {Visibility::kVisible, Agility::kFast, confinement};
    cert.k = k;
    cert.monotone = monotone;
    cert.graph_sha256 = fingerprint(d);
    cert.kind = CertificateKind::kPositional;
    outcome.winner = Winner::kCops;
    outcome.certificate = std::move(cert);
    return outcome;
  }

  const std::vector<VertexSet> moves = cop_moves(n, k);
  const int num_moves = static_cast<int>(moves.size());
  const std::size_t num_nodes = static_cast<std::size_t>(num_moves) * n;

  std::vector<VertexSet> space(num_nodes);
  std::vector<int> rank(num_nodes, -1);
  std::vector<int> choice(num_nodes, -1);
  std::vector<std::size_t> undecided;
  for (int i = 0; i < num_moves; ++i) {
    for (Vertex r = 0; r < n; ++r) {
      if (moves[i].contains(r)) continue;
      const std::size_t node = static_cast<std::size_t>(i) * n + r;
      space[node] = robber_space(d, moves[i], r);
      undecided.push_back(node);
    }
  }

  std::uint64_t transitions = 0;
  struct Decision {
    std::size_t node;
    int move;
  };
  std::vector<Decision> fresh;
  for (int round = 1;; ++round) {
    fresh.clear();
    for (std::size_t node : undecided) {
      const int i = static_cast<int>(node / n);
      const Vertex r = static_cast<Vertex>(node % n);
      const VertexSet cops = moves[i];
      for (int j = 0; j < num_moves; ++j) {
        // Standing still never changes the position.
        if (j == i) continue;
        const VertexSet options_set =
            robber_options(d, cops, moves[j], r, confinement);
        transitions += 1 + static_cast<std::uint64_t>(options_set.size());
        bool good = true;
        for (Vertex reply : options_set) {
          const std::size_t succ = static_cast<std::size_t>(j) * n + reply;
          if (rank[succ] < 0 ||
              (monotone && !space[succ].subset_of(space[node]))) {
            good = false;
            break;
          }
        }
        if (good) {
          fresh.push_back({node, j});
          break;
        }
      }
      if (transitions > options.max_transitions) {
        throw BudgetExceeded(options.max_transitions);
      }
    }
    if (fresh.empty()) break;
    for (const Decision& dec : fresh) {
      rank[dec.node] = round;
      choice[dec.node] = dec.move;
    }
    std::erase_if(undecided,
                  [&](std::size_t node) { return rank[node] >= 0; });
  }
  outcome.states_explored = transitions;

  // moves[0] is the empty set: the robber picks any start against no cops.
  for (Vertex r = 0; r < n; ++r) {
    if (rank[r] < 0) {
      outcome.winner = Winner::kRobber;
      return outcome;
    }
  }

  // Keep only the positions reachable under the strategy.
  std::vector<bool> used(num_nodes, false);
  std::vector<std::size_t> stack;
  for (Vertex r = 0; r < n; ++r) {
    used[r] = true;
    stack.push_back(static_cast<std::size_t>(r));
  }
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    const int i = static_cast<int>(node / n);
    const int j = choice[node];
    const VertexSet replies =
        robber_options(d, moves[i], moves[j], static_cast<Vertex>(node % n),
                       confinement);
    for (Vertex reply : replies) {
      const std::size_t succ = static_cast<std::size_t>(j) * n + reply;
      if (!used[succ]) {
        used[succ] = true;
        stack.push_back(succ);
      }
    }
  }

  Certificate cert;
  cert.variant = {Visibility::kVisible, Agility::kFast, confinement};
  cert.k = k;
  cert.monotone = monotone;
  cert.graph_sha256 = fingerprint(d);
  cert.kind = CertificateKind::kPositional;
  // Node order is (cops in lex order, robber), the certificate's sort order.
  for (std::size_t node = 0; node < num_nodes; ++node) {
    if (!used[node]) continue;
    cert.positional.push_back(
        {{moves[node / n], static_cast<Vertex>(node % n)}, moves[choice[node]]});
  }
  outcome.winner = Winner::kCops;
  outcome.certificate = std::move(cert);
  return outcome;
}

}  // namespace copsearch
