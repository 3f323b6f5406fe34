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

#ifndef COPSEARCH_DIGRAPH_HPP_
#define COPSEARCH_DIGRAPH_HPP_

#include <compare>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copsearch/vertex_set.hpp"

namespace copsearch {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

struct UndirectedEdge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const UndirectedEdge&) const = default;
};

// Thrown when a graph would violate simplicity or id bounds.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an exact exponential routine is asked for an instance above its
// size limit.
class SizeLimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown by parse_edge_list; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Immutable simple finite digraph on vertices 0..n-1.
class Digraph {
 public:
  Digraph() = default;
  // Throws GraphError on self-loops, duplicate arcs, ids outside [0, n), or
  // n outside [0, kMaxVertices].
  Digraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  VertexSet vertices() const { return VertexSet::full(n_); }
  // Sorted lexicographically by (tail, head).
  const std::vector<Arc>& arcs() const { return arcs_; }
  VertexSet out(Vertex v) const { return out_[v]; }
  VertexSet in(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Edge-list v1: '#' comment lines, optional "n <count>" header as the first
// non-comment line, then one "u v" arc per line.
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(std::string_view text);
Digraph read_edge_list_file(const std::string& path);
// Header line followed by the arcs in lexicographic order.
std::string to_edge_list(const Digraph& d);
// Lower-case hex SHA-256 of to_edge_list(d).
std::string fingerprint(const Digraph& d);

// Vertices outside `forbidden` reachable from sources - forbidden inside
// d - forbidden.
VertexSet reach(const Digraph& d, VertexSet sources, VertexSet forbidden);
// Vertices outside `forbidden` that reach `targets` - forbidden.
VertexSet reach_backward(const Digraph& d, VertexSet targets,
                         VertexSet forbidden);

// Strongly connected components; each class sorted, classes ordered by their
// smallest member.
std::vector<VertexSet> scc(const Digraph& d);
bool is_acyclic(const Digraph& d);
// Acyclicity of d[within] without building the subgraph.
bool is_acyclic_within(const Digraph& d, VertexSet within);

struct InducedSubgraph {
  Digraph graph;
  // original_id[new id] = id in the parent graph.
  std::vector<Vertex> original_id;
};
InducedSubgraph induced_subgraph(const Digraph& d, VertexSet keep);

// Throws GraphError if some arc of `remove` is not in d.
Digraph delete_arcs(const Digraph& d, const std::vector<Arc>& remove);

// Each edge {u, v} becomes the arcs (u, v) and (v, u).
Digraph bidirect(int n, const std::vector<UndirectedEdge>& edges);

// Reflexive reachability: row u holds every v with u = v or a path u -> v.
std::vector<VertexSet> transitive_closure(const Digraph& d);

// Relabels vertex v to perm[v].
Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm);

}  // namespace copsearch

#endif  // COPSEARCH_DIGRAPH_HPP_
