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
#include <unordered_map>
#include <vector>

#include "copsearch/solver.hpp"

namespace copsearch {

namespace {

struct StateKey {
  std::uint64_t cops;
  std::uint64_t contaminated;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const noexcept {
    VertexSetHash h;
    return h(VertexSet::from_bits(key.cops)) * 31 +
           h(VertexSet::from_bits(key.contaminated));
  }
};

}  // namespace

Outcome solve_invisible(const Digraph& d, int k, Agility agility,
                        bool monotone, const SolveOptions& options) {
  if (k < 0 || k > d.vertex_count()) {
    throw std::invalid_argument("cop budget " + std::to_string(k) +
                                " outside [0, " +
                                std::to_string(d.vertex_count()) + "]");
  }
  const GameVariant variant{Visibility::kInvisible, agility,
                            Confinement::kReachability};
  auto make_certificate = [&](std::vector<VertexSet> sequence) {
    Certificate cert;
    cert.variant = variant;
    cert.k = k;
    cert.monotone = monotone;
    cert.graph_sha256 = fingerprint(d);
    cert.kind = CertificateKind::kSequence;
    cert.sequence = std::move(sequence);
    return cert;
  };

  Outcome outcome;
  if (d.vertex_count() == 0) {
    outcome.winner = Winner::kCops;
    outcome.certificate = make_certificate({});
    return outcome;
  }

  const std::vector<VertexSet> moves = cop_moves(d.vertex_count(), k);
  struct Node {
    ContaminationState state;
    int parent;
  };
  std::vector<Node> nodes;
  std::unordered_map<StateKey, int, StateKeyHash> seen;
  nodes.push_back({{VertexSet{}, d.vertices()}, -1});
  seen.emplace(StateKey{0, d.vertices().bits()}, 0);

  std::uint64_t transitions = 0;
  // Breadth-first, so the first clearing found is a shortest one; moves are
  // tried in lex order, which fixes the certificate deterministically.
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const ContaminationState current = nodes[head].state;
    for (VertexSet next : moves) {
      if (next == current.cops) continue;
      ++transitions;
      const VertexSet after =
          contaminate(d, current.cops, next, current.contaminated, agility);
      if (monotone && !is_monotone_transition(current.contaminated, after)) {
        continue;
      }
      if (after.empty()) {
        std::vector<VertexSet> sequence{next};
        for (int at = static_cast<int>(head); at > 0; at = nodes[at].parent) {
          sequence.push_back(nodes[at].state.cops);
        }
        std::reverse(sequence.begin(), sequence.end());
        outcome.winner = Winner::kCops;
        outcome.states_explored = transitions;
        outcome.certificate = make_certificate(std::move(sequence));
        return outcome;
      }
      auto [it, inserted] = seen.emplace(StateKey{next.bits(), after.bits()},
                                         static_cast<int>(nodes.size()));
      if (inserted) nodes.push_back({{next, after}, static_cast<int>(head)});
    }
    if (transitions > options.max_transitions) {
      throw BudgetExceeded(options.max_transitions);
    }
  }
  outcome.winner = Winner::kRobber;
  outcome.states_explored = transitions;
  return outcome;
}

}  // namespace copsearch
