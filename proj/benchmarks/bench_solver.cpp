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

#include <benchmark/benchmark.h>

#include "copsearch/enumerate.hpp"
#include "copsearch/hardproblems.hpp"
#include "copsearch/lab.hpp"
#include "copsearch/solver.hpp"
#include "copsearch/width.hpp"

namespace {

using namespace copsearch;

Digraph Cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, arcs);
}

void BM_CopNumberVisible(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cop_number(d, GameVariant::visible(), true).value);
  }
}
BENCHMARK(BM_CopNumberVisible)->DenseRange(5, 9, 2);

void BM_CopNumberInert(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cop_number(d, GameVariant::inert(), true).value);
  }
}
BENCHMARK(BM_CopNumberInert)->DenseRange(5, 9, 2);

void BM_DirectedCycleGap(benchmark::State& state) {
  const Digraph d = Cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gap(d, GameVariant::visible()).gap);
}
BENCHMARK(BM_DirectedCycleGap)->Arg(4)->Arg(8)->Arg(12);

void BM_GapScanThreeVertices(benchmark::State& state) {
  const auto source = enumeration_source(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gap_scan(source, GameVariant::inert()).summary);
  }
}
BENCHMARK(BM_GapScanThreeVertices);

void BM_Treewidth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<UndirectedEdge> edges;
  for (int v = 0; v < n; ++v) {
    edges.push_back({v, (v + 1) % n});
    edges.push_back({v, (v + 3) % n});
  }
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(n, edges));
}
BENCHMARK(BM_Treewidth)->Arg(8)->Arg(12);

void BM_FeedbackArcSet(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(min_feedback_arc_set(d).objective);
}
BENCHMARK(BM_FeedbackArcSet)->Arg(6)->Arg(8);

void BM_Hamiltonian(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_cycle(d).objective);
}
BENCHMARK(BM_Hamiltonian)->Arg(10)->Arg(16);

void BM_MinEquivalentSubgraph(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.35, 8);
  for (auto _ : state) benchmark::DoNotOptimize(min_equivalent_subgraph(d).objective);
}
BENCHMARK(BM_MinEquivalentSubgraph)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
