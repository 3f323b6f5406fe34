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

#include "copsearch/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace copsearch {

namespace {

std::vector<Arc> ordered_pairs(int n) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  return pairs;
}

void require_at_most(int n, int limit, const char* what) {
  if (n < 0 || n > limit) {
    throw SizeLimitExceeded(std::string(what) + " supports 0 <= n <= " +
                            std::to_string(limit) + ", got " +
                            std::to_string(n));
  }
}

// Minimises the packed adjacency over all permutations.
std::uint64_t min_code(int n, const std::vector<Arc>& arcs) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const Arc& a : arcs) {
      const int u = perm[a.tail];
      const int v = perm[a.head];
      code |= std::uint64_t{1} << (u * (n - 1) + (v < u ? v : v - 1));
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(int n, const std::vector<UndirectedEdge>& edges) {
  if (n == 0) return true;
  std::vector<VertexSet> adj(n);
  for (const UndirectedEdge& e : edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  VertexSet seen = VertexSet::singleton(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= adj[v];
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen.size() == n;
}

}  // namespace

DigraphEnumerator::DigraphEnumerator(int n) : n_(n) {
  require_at_most(n, kEnumerateMaxVertices, "digraph enumeration");
  pairs_ = ordered_pairs(n);
}

Digraph DigraphEnumerator::at(std::uint64_t index) const {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if ((index >> i) & 1U) arcs.push_back(pairs_[i]);
  }
  return Digraph(n_, std::move(arcs));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("arc probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (const Arc& pair : ordered_pairs(n)) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) arcs.push_back(pair);
  }
  return Digraph(n, std::move(arcs));
}

std::vector<std::vector<UndirectedEdge>> connected_graphs(int n) {
  require_at_most(n, 6, "connected graph enumeration");
  std::vector<UndirectedEdge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<std::vector<UndirectedEdge>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<UndirectedEdge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    if (connected(n, edges)) out.push_back(std::move(edges));
  }
  return out;
}

std::uint64_t canonical_code(const Digraph& d) {
  require_at_most(d.vertex_count(), 8, "canonical_code");
  return min_code(d.vertex_count(), d.arcs());
}

std::uint64_t canonical_code(int n, const std::vector<UndirectedEdge>& edges) {
  require_at_most(n, 8, "canonical_code");
  std::vector<Arc> arcs;
  for (const UndirectedEdge& e : edges) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return min_code(n, arcs);
}

void for_each_extension(const std::vector<Digraph>& base, bool sink_only,
                        const std::function<void(const Digraph&)>& fn) {
  for (const Digraph& g : base) {
    const int n = g.vertex_count();
    if (n + 1 > kMaxVertices) throw SizeLimitExceeded("graph too large to extend");
    const std::uint64_t in_choices = std::uint64_t{1} << n;
    const std::uint64_t out_choices = sink_only ? 1 : in_choices;
    for (std::uint64_t ins = 0; ins < in_choices; ++ins) {
      for (std::uint64_t outs = 0; outs < out_choices; ++outs) {
        std::vector<Arc> arcs = g.arcs();
        for (Vertex v = 0; v < n; ++v) {
          if ((ins >> v) & 1U) arcs.push_back({v, n});
          if ((outs >> v) & 1U) arcs.push_back({n, v});
        }
        fn(Digraph(n + 1, std::move(arcs)));
      }
    }
  }
}

namespace {

std::vector<Digraph> dedup(int n, bool sink_only,
                           const std::vector<Digraph>& smaller) {
  std::vector<Digraph> out;
  std::unordered_set<std::uint64_t> codes;
  for_each_extension(smaller, sink_only, [&](const Digraph& g) {
    if (codes.insert(min_code(n, g.arcs())).second) out.push_back(g);
  });
  return out;
}

}  // namespace

std::vector<Digraph> digraph_classes(int n) {
  require_at_most(n, 5, "digraph_classes");
  std::vector<Digraph> classes{Digraph(0, {})};
  for (int m = 1; m <= n; ++m) classes = dedup(m, false, classes);
  return classes;
}

std::vector<Digraph> dag_classes(int n) {
  require_at_most(n, 6, "dag_classes");
  std::vector<Digraph> classes{Digraph(0, {})};
  for (int m = 1; m <= n; ++m) classes = dedup(m, true, classes);
  return classes;
}

std::vector<std::vector<UndirectedEdge>> connected_graph_classes(int n) {
  require_at_most(n, 6, "connected_graph_classes");
  std::vector<std::vector<UndirectedEdge>> out;
  std::unordered_set<std::uint64_t> codes;
  for (auto& edges : connected_graphs(n)) {
    if (codes.insert(canonical_code(n, edges)).second) {
      out.push_back(std::move(edges));
    }
  }
  return out;
}

}  // namespace copsearch
