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

#ifndef COPSEARCH_HARDPROBLEMS_HPP_
#define COPSEARCH_HARDPROBLEMS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "copsearch/digraph.hpp"
#include "copsearch/solver.hpp"

namespace copsearch {

enum class WitnessKind { kNone, kVertexSet, kArcSet, kCycle };

struct ProblemSolution {
  std::string problem;
  WitnessKind witness_kind = WitnessKind::kNone;
  VertexSet vertex_set;
  std::vector<Arc> arc_set;
  // Hamiltonian cycle as a vertex sequence starting at 0; the closing arc
  // back to the first vertex is implied.
  std::vector<Vertex> cycle;
  // Witness size; for Hamiltonicity 1 if a cycle exists and 0 otherwise.
  int objective = 0;
  // True only when the search was exhaustive.
  bool optimal = false;
};

inline constexpr int kHamiltonianMaxVertices = 18;
inline constexpr int kFvsMaxVertices = 14;
inline constexpr int kFasMaxVertices = 9;
inline constexpr int kFasMaxArcs = 20;
inline constexpr int kMesMaxVertices = 8;

// Held-Karp style subset DP over (visited set, endpoint).
ProblemSolution hamiltonian_cycle(const Digraph& d);
// Smallest S with d - S acyclic, by increasing cardinality.
ProblemSolution min_feedback_vertex_set(const Digraph& d);
// Smallest arc set whose deletion leaves d acyclic. Iterative deepening on
// the set size; each level branches on the arcs of a shortest remaining
// cycle, one of which every solution must contain. Requires
// n <= kFasMaxVertices or m <= kFasMaxArcs.
ProblemSolution min_feedback_arc_set(const Digraph& d);
// Minimum number of backward arcs over all vertex orderings, by dynamic
// programming over the set of vertices already placed. Independent of
// min_feedback_arc_set.
int feedback_arc_ordering_value(const Digraph& d);
// Smallest arc subset with the same reachability relation as d. Iterative
// deepening on the subset size with include/exclude branching; a branch dies
// once the chosen arcs plus the undecided ones lose some reachability.
ProblemSolution min_equivalent_subgraph(const Digraph& d);
// Arcs (u, v) of a DAG with no other u -> v path. Throws GraphError when d
// has a cycle.
std::vector<Arc> transitive_reduction_dag(const Digraph& d);

// Witness checks used by tests and the CLI.
bool is_hamiltonian_cycle(const Digraph& d, const std::vector<Vertex>& cycle);
bool is_feedback_vertex_set(const Digraph& d, VertexSet s);
bool is_feedback_arc_set(const Digraph& d, const std::vector<Arc>& arcs);
bool is_equivalent_subgraph(const Digraph& d, const std::vector<Arc>& arcs);

struct NamedInstance {
  std::string id;
  Digraph graph;
};

// Cells are empty when a solver's size limit or the state budget was hit;
// `status` then lists what was skipped.
struct WidthAnnotatedRow {
  std::string instance;
  int n = 0;
  int m = 0;
  std::optional<bool> hamiltonian;
  std::optional<int> fvs;
  std::optional<int> fas;
  std::optional<int> mes;
  std::optional<int> visible_monotone_copnum;
  std::optional<int> inert_monotone_copnum;
  std::string status = "ok";
};

std::vector<WidthAnnotatedRow> width_annotated_report(
    const std::vector<NamedInstance>& instances,
    const SolveOptions& options = {});

// Header "instance,n,m,hamiltonian,fvs,fas,mes,dagwidth,kellywidth,status".
void write_width_report_csv(const std::vector<WidthAnnotatedRow>& rows,
                            std::ostream& out);
void write_width_report_jsonl(const std::vector<WidthAnnotatedRow>& rows,
                              std::ostream& out);

}  // namespace copsearch

#endif  // COPSEARCH_HARDPROBLEMS_HPP_
