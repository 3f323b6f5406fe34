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
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "copsearch/width.hpp"

namespace copsearch {

// tw(G) = TW(V) where TW(empty) = -1 and
//   TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|),
// Q(S, v) being the vertices outside S + v that v reaches through S. The
// ordering-prefix S is eliminated first; Q counts the fill-in neighbours of v.
int treewidth_exact(int n, const std::vector<UndirectedEdge>& edges) {
  if (n < 0 || n > kTreewidthMaxVertices) {
    throw SizeLimitExceeded("treewidth_exact supports at most " +
                            std::to_string(kTreewidthMaxVertices) +
                            " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const UndirectedEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v) {
      throw std::invalid_argument("edge outside the vertex range or a loop");
    }
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  if (n == 0) return -1;

  auto q_size = [&](std::uint32_t eliminated, int v) {
    std::uint32_t visited = 1U << v;
    std::uint32_t frontier = 1U << v;
    std::uint32_t boundary = 0;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      next &= ~visited;
      visited |= next;
      boundary |= next & ~eliminated;
      frontier = next & eliminated;
    }
    return std::popcount(boundary);
  };

  const std::uint32_t full = (1U << n) - 1;
  std::vector<int> best(std::size_t{1} << n, n);
  best[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int value = n;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prefix = s & ~(1U << v);
      value = std::min(value, std::max(best[prefix], q_size(prefix, v)));
    }
    best[s] = value;
  }
  return best[full];
}

}  // namespace copsearch
