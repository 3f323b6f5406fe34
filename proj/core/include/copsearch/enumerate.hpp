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

#ifndef COPSEARCH_ENUMERATE_HPP_
#define COPSEARCH_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "copsearch/digraph.hpp"

namespace copsearch {

inline constexpr int kEnumerateMaxVertices = 5;

// All labeled simple digraphs on n vertices. Bit i of the index selects the
// i-th ordered pair (u, v), u != v, in lexicographic order, so index 0 is
// arcless and count() - 1 is complete.
class DigraphEnumerator {
 public:
  // Throws SizeLimitExceeded for n outside [0, kEnumerateMaxVertices].
  explicit DigraphEnumerator(int n);

  int vertex_count() const { return n_; }
  std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }
  Digraph at(std::uint64_t index) const;

 private:
  int n_;
  std::vector<Arc> pairs_;
};

// Each ordered pair u != v is an arc with probability p. The generator is
// std::mt19937_64 seeded with `seed`; a pair is kept when the top 53 bits of
// the next draw, scaled to [0, 1), are below p. Pairs are visited in
// lexicographic order, so the output is identical on every platform.
Digraph random_digraph(int n, double p, std::uint64_t seed);

// All labeled undirected graphs on n <= 6 vertices that are connected.
std::vector<std::vector<UndirectedEdge>> connected_graphs(int n);

// Adjacency bits of d minimised over all vertex relabelings; equal iff
// isomorphic. Limited to n <= 8.
std::uint64_t canonical_code(const Digraph& d);
std::uint64_t canonical_code(int n, const std::vector<UndirectedEdge>& edges);

// One digraph per isomorphism class on n <= 5 vertices.
std::vector<Digraph> digraph_classes(int n);
// One acyclic digraph per isomorphism class on n <= 6 vertices.
std::vector<Digraph> dag_classes(int n);
// One connected undirected graph per isomorphism class on n <= 6 vertices.
std::vector<std::vector<UndirectedEdge>> connected_graph_classes(int n);

// Calls `fn` for every way of adding vertex n, with arbitrary in- and
// out-neighbourhoods, to each graph of `base`. When `base` meets every
// isomorphism class on n vertices, the extensions meet every class on n + 1
// vertices (delete any vertex to see why). With `sink_only` the new vertex
// gets no out-arcs, which covers every DAG class from the DAG classes.
void for_each_extension(const std::vector<Digraph>& base, bool sink_only,
                        const std::function<void(const Digraph&)>& fn);

}  // namespace copsearch

#endif  // COPSEARCH_ENUMERATE_HPP_
