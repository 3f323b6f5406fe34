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

#include "copsearch/hardproblems.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>

#include "copsearch/arena.hpp"

namespace copsearch {

namespace {

void require_at_most(int value, int limit, const std::string& what) {
  if (value > limit) {
    throw SizeLimitExceeded(what + " limited to " + std::to_string(limit) +
                            ", got " + std::to_string(value));
  }
}

VertexSet reach_in(const std::vector<VertexSet>& out, Vertex from) {
  VertexSet seen = VertexSet::singleton(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= out[v];
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool same_closure(const std::vector<VertexSet>& out,
                  const std::vector<VertexSet>& target) {
  for (Vertex u = 0; u < static_cast<Vertex>(out.size()); ++u) {
    if (reach_in(out, u) != target[u]) return false;
  }
  return true;
}

}  // namespace

ProblemSolution hamiltonian_cycle(const Digraph& d) {
  const int n = d.vertex_count();
  require_at_most(n, kHamiltonianMaxVertices, "hamiltonian_cycle vertex count");
  ProblemSolution sol;
  sol.problem = "hamiltonian_cycle";
  sol.optimal = true;
  if (n < 2) return sol;

  // ends[mask] = endpoints of paths from 0 that visit exactly `mask`.
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    for (std::uint32_t e = ends[mask]; e != 0; e &= e - 1) {
      const Vertex v = std::countr_zero(e);
      const std::uint32_t fresh =
          static_cast<std::uint32_t>(d.out(v).bits()) & ~mask;
      for (std::uint32_t f = fresh; f != 0; f &= f - 1) {
        const int w = std::countr_zero(f);
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  std::uint32_t closing = ends[full] & static_cast<std::uint32_t>(d.in(0).bits());
  if (closing == 0) return sol;

  Vertex cur = std::countr_zero(closing);
  std::uint32_t mask = full;
  std::vector<Vertex> reversed{cur};
  while (mask != 1) {
    const std::uint32_t prev_mask = mask & ~(1U << cur);
    const std::uint32_t cand =
        ends[prev_mask] & static_cast<std::uint32_t>(d.in(cur).bits());
    cur = std::countr_zero(cand);
    mask = prev_mask;
    reversed.push_back(cur);
  }
  sol.cycle.assign(reversed.rbegin(), reversed.rend());
  sol.witness_kind = WitnessKind::kCycle;
  sol.objective = 1;
  return sol;
}

ProblemSolution min_feedback_vertex_set(const Digraph& d) {
  const int n = d.vertex_count();
  require_at_most(n, kFvsMaxVertices, "min_feedback_vertex_set vertex count");
  ProblemSolution sol;
  sol.problem = "feedback_vertex_set";
  sol.witness_kind = WitnessKind::kVertexSet;
  sol.optimal = true;
  const VertexSet all = d.vertices();
  if (is_acyclic_within(d, all)) return sol;
  for (int size = 1; size <= n; ++size) {
    // Gosper's hack walks the size-subsets in increasing numeric order.
    std::uint64_t s = (std::uint64_t{1} << size) - 1;
    while (s < (std::uint64_t{1} << n)) {
      const VertexSet removed = VertexSet::from_bits(s);
      if (is_acyclic_within(d, all - removed)) {
        sol.vertex_set = removed;
        sol.objective = size;
        return sol;
      }
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t ripple = s + low;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  throw std::logic_error("deleting every vertex leaves an acyclic graph");
}

namespace {

class FasSearch {
 public:
  explicit FasSearch(const Digraph& d)
      : n_(d.vertex_count()), out_(n_), keep_(n_) {
    for (Vertex v = 0; v < n_; ++v) out_[v] = d.out(v);
  }

  bool run(int budget) { return search(budget); }
  const std::vector<Arc>& removed() const { return removed_; }

 private:
  struct Cycle {
    std::array<Arc, kMaxVertices> arcs;
    int length = 0;
  };

  // Arcs of a shortest directed cycle; length 0 if the graph is acyclic.
  Cycle shortest_cycle() const {
    Cycle best;
    std::array<Vertex, kMaxVertices> parent{};
    for (Vertex start = 0; start < n_; ++start) {
      VertexSet seen = VertexSet::singleton(start);
      VertexSet layer = seen;
      int length = 0;
      Vertex last = -1;
      while (!layer.empty() && last < 0) {
        ++length;
        if (best.length > 0 && length >= best.length) break;
        VertexSet next;
        for (Vertex v : layer) {
          if (out_[v].contains(start)) {
            last = v;
            break;
          }
          for (Vertex w : out_[v] - seen) {
            seen.insert(w);
            parent[w] = v;
            next.insert(w);
          }
        }
        layer = next;
      }
      if (last < 0) continue;
      best.length = length;
      int i = length - 1;
      best.arcs[i] = {last, start};
      for (Vertex v = last; v != start; v = parent[v]) best.arcs[--i] = {parent[v], v};
    }
    return best;
  }

  // Greedy count of arc-disjoint cycles, starting from `first`; every
  // feedback arc set needs at least that many arcs.
  int disjoint_cycles(const Cycle& first) {
    const std::vector<VertexSet> saved = out_;
    int count = 0;
    for (Cycle c = first; c.length > 0; c = shortest_cycle()) {
      ++count;
      for (int i = 0; i < c.length; ++i) out_[c.arcs[i].tail].erase(c.arcs[i].head);
    }
    out_ = saved;
    return count;
  }

  // Branch i deletes the i-th free arc of the cycle and pins the earlier ones,
  // so every arc subset is reached at most once.
  bool search(int budget) {
    const Cycle cycle = shortest_cycle();
    if (cycle.length == 0) return true;
    if (budget == 0 || disjoint_cycles(cycle) > budget) return false;
    std::array<Arc, kMaxVertices> pinned;
    int pinned_count = 0;
    bool found = false;
    for (int i = 0; i < cycle.length; ++i) {
      const Arc a = cycle.arcs[i];
      if (keep_[a.tail].contains(a.head)) continue;
      out_[a.tail].erase(a.head);
      removed_.push_back(a);
      if (search(budget - 1)) {
        found = true;
        break;
      }
      removed_.pop_back();
      out_[a.tail].insert(a.head);
      keep_[a.tail].insert(a.head);
      pinned[pinned_count++] = a;
    }
    for (int i = 0; i < pinned_count; ++i) {
      keep_[pinned[i].tail].erase(pinned[i].head);
    }
    return found;
  }

  int n_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> keep_;
  std::vector<Arc> removed_;
};

}  // namespace

ProblemSolution min_feedback_arc_set(const Digraph& d) {
  if (d.vertex_count() > kFasMaxVertices && d.arc_count() > kFasMaxArcs) {
    throw SizeLimitExceeded(
        "min_feedback_arc_set needs n <= " + std::to_string(kFasMaxVertices) +
        " or m <= " + std::to_string(kFasMaxArcs));
  }
  ProblemSolution sol;
  sol.problem = "feedback_arc_set";
  sol.witness_kind = WitnessKind::kArcSet;
  sol.optimal = true;
  // Opposite arc pairs are disjoint 2-cycles, each costing one arc.
  int two_cycles = 0;
  for (const Arc& a : d.arcs()) {
    if (a.tail < a.head && d.has_arc(a.head, a.tail)) ++two_cycles;
  }
  for (int size = two_cycles;; ++size) {
    FasSearch search(d);
    if (search.run(size)) {
      sol.arc_set = search.removed();
      std::sort(sol.arc_set.begin(), sol.arc_set.end());
      sol.objective = size;
      return sol;
    }
  }
}

int feedback_arc_ordering_value(const Digraph& d) {
  const int n = d.vertex_count();
  require_at_most(n, 20, "feedback_arc_ordering_value vertex count");
  // best[S]: fewest backward arcs when S occupies the first |S| places.
  std::vector<int> best(std::size_t{1} << n, std::numeric_limits<int>::max());
  best[0] = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (best[s] == std::numeric_limits<int>::max()) continue;
    const VertexSet placed = VertexSet::from_bits(s);
    for (Vertex v : d.vertices() - placed) {
      const int cost = best[s] + (d.out(v) & placed).size();
      auto& slot = best[s | (std::uint64_t{1} << v)];
      slot = std::min(slot, cost);
    }
  }
  return best[(std::uint64_t{1} << n) - 1];
}

ProblemSolution min_equivalent_subgraph(const Digraph& d) {
  const int n = d.vertex_count();
  require_at_most(n, kMesMaxVertices, "min_equivalent_subgraph vertex count");
  const std::vector<Arc>& arcs = d.arcs();
  const int m = static_cast<int>(arcs.size());
  const std::vector<VertexSet> target = transitive_closure(d);

  // Every vertex that reaches another needs an out-arc; every vertex reached
  // from another needs an in-arc.
  int need_out = 0;
  VertexSet reached;
  for (Vertex u = 0; u < n; ++u) {
    if (target[u].size() > 1) ++need_out;
    reached |= target[u] - VertexSet::singleton(u);
  }
  const int lower = std::max(need_out, reached.size());

  std::vector<VertexSet> chosen(n);
  std::vector<VertexSet> available(n);
  for (Vertex u = 0; u < n; ++u) available[u] = d.out(u);
  std::vector<Arc> picked;

  std::function<bool(int, int)> search = [&](int idx, int budget) -> bool {
    if (budget == 0) return same_closure(chosen, target);
    if (idx == m) return true;  // available == chosen and still equivalent
    const Arc& a = arcs[idx];
    available[a.tail].erase(a.head);
    if (same_closure(available, target) && search(idx + 1, budget)) return true;
    available[a.tail].insert(a.head);
    chosen[a.tail].insert(a.head);
    picked.push_back(a);
    if (search(idx + 1, budget - 1)) return true;
    picked.pop_back();
    chosen[a.tail].erase(a.head);
    return false;
  };

  ProblemSolution sol;
  sol.problem = "min_equivalent_subgraph";
  sol.witness_kind = WitnessKind::kArcSet;
  sol.optimal = true;
  for (int size = lower; size <= m; ++size) {
    if (search(0, size)) {
      sol.arc_set = picked;
      sol.objective = static_cast<int>(picked.size());
      return sol;
    }
  }
  throw std::logic_error("the full arc set is always equivalent");
}

std::vector<Arc> transitive_reduction_dag(const Digraph& d) {
  if (!is_acyclic(d)) {
    throw GraphError("transitive_reduction_dag requires an acyclic digraph");
  }
  const std::vector<VertexSet> closure = transitive_closure(d);
  std::vector<Arc> kept;
  for (const Arc& a : d.arcs()) {
    bool bypass = false;
    for (Vertex w : d.out(a.tail) - VertexSet::singleton(a.head)) {
      if (closure[w].contains(a.head)) {
        bypass = true;
        break;
      }
    }
    if (!bypass) kept.push_back(a);
  }
  return kept;
}

bool is_hamiltonian_cycle(const Digraph& d, const std::vector<Vertex>& cycle) {
  const int n = d.vertex_count();
  if (n < 2 || static_cast<int>(cycle.size()) != n) return false;
  VertexSet seen;
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < n; ++i) {
    if (!d.has_arc(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

bool is_feedback_vertex_set(const Digraph& d, VertexSet s) {
  if (!s.subset_of(d.vertices())) return false;
  return is_acyclic(induced_subgraph(d, d.vertices() - s).graph);
}

bool is_feedback_arc_set(const Digraph& d, const std::vector<Arc>& arcs) {
  try {
    return is_acyclic(delete_arcs(d, arcs));
  } catch (const GraphError&) {
    return false;
  }
}

bool is_equivalent_subgraph(const Digraph& d, const std::vector<Arc>& arcs) {
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= d.vertex_count() || a.head < 0 ||
        a.head >= d.vertex_count() || !d.has_arc(a.tail, a.head)) {
      return false;
    }
  }
  try {
    return transitive_closure(Digraph(d.vertex_count(), arcs)) ==
           transitive_closure(d);
  } catch (const GraphError&) {
    return false;
  }
}

std::vector<WidthAnnotatedRow> width_annotated_report(
    const std::vector<NamedInstance>& instances, const SolveOptions& options) {
  std::vector<WidthAnnotatedRow> rows;
  for (const NamedInstance& inst : instances) {
    WidthAnnotatedRow row;
    row.instance = inst.id;
    row.n = inst.graph.vertex_count();
    row.m = inst.graph.arc_count();
    std::vector<std::string> skipped;
    auto attempt = [&](const char* what, auto&& fn) {
      try {
        fn();
      } catch (const SizeLimitExceeded&) {
        skipped.push_back(std::string(what) + ":size_limit");
      } catch (const BudgetExceeded&) {
        skipped.push_back(std::string(what) + ":budget");
      }
    };
    attempt("ham", [&] { row.hamiltonian = hamiltonian_cycle(inst.graph).objective == 1; });
    attempt("fvs", [&] { row.fvs = min_feedback_vertex_set(inst.graph).objective; });
    attempt("fas", [&] { row.fas = min_feedback_arc_set(inst.graph).objective; });
    attempt("mes", [&] { row.mes = min_equivalent_subgraph(inst.graph).objective; });
    attempt("dagwidth", [&] {
      row.visible_monotone_copnum =
          cop_number(inst.graph, GameVariant::visible(), true, options).value;
    });
    attempt("kellywidth", [&] {
      row.inert_monotone_copnum =
          cop_number(inst.graph, GameVariant::inert(), true, options).value;
    });
    if (!skipped.empty()) {
      row.status.clear();
      for (std::size_t i = 0; i < skipped.size(); ++i) {
        if (i) row.status += ';';
        row.status += skipped[i];
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "yes" : "no";
  } else {
    return std::to_string(*v);
  }
}

template <typename T>
nlohmann::ordered_json json_cell(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void write_width_report_csv(const std::vector<WidthAnnotatedRow>& rows,
                            std::ostream& out) {
  out << "instance,n,m,hamiltonian,fvs,fas,mes,dagwidth,kellywidth,status\n";
  for (const WidthAnnotatedRow& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.m << ',' << cell(r.hamiltonian)
        << ',' << cell(r.fvs) << ',' << cell(r.fas) << ',' << cell(r.mes) << ','
        << cell(r.visible_monotone_copnum) << ','
        << cell(r.inert_monotone_copnum) << ',' << r.status << '\n';
  }
}

void write_width_report_jsonl(const std::vector<WidthAnnotatedRow>& rows,
                              std::ostream& out) {
  for (const WidthAnnotatedRow& r : rows) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["hamiltonian"] = json_cell(r.hamiltonian);
    j["fvs"] = json_cell(r.fvs);
    j["fas"] = json_cell(r.fas);
    j["mes"] = json_cell(r.mes);
    j["dagwidth"] = json_cell(r.visible_monotone_copnum);
    j["kellywidth"] = json_cell(r.inert_monotone_copnum);
    j["status"] = r.status;
    out << j.dump() << '\n';
  }
}

}  // namespace copsearch
