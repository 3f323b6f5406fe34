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

#include <random>
#include <sstream>

#include "copsearch/enumerate.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace copsearch {
namespace {

Digraph C3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph Chain3() { return Digraph(3, {{0, 1}, {1, 2}}); }
Digraph Tournament3() { return Digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Digraph Cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, arcs);
}

std::vector<Digraph> Sample(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Digraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % max_n);
    const double p = 0.15 + 0.1 * static_cast<double>(rng() % 5);
    out.push_back(random_digraph(n, p, rng()));
  }
  return out;
}

TEST(HamiltonianTest, Examples) {
  const ProblemSolution c5 = hamiltonian_cycle(Cycle(5));
  EXPECT_EQ(c5.objective, 1);
  EXPECT_EQ(c5.cycle, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(hamiltonian_cycle(Chain3()).objective, 0);
  EXPECT_TRUE(hamiltonian_cycle(Chain3()).cycle.empty());
  const Digraph k4 = bidirect(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const ProblemSolution s = hamiltonian_cycle(k4);
  EXPECT_TRUE(is_hamiltonian_cycle(k4, s.cycle));
  EXPECT_TRUE(oracle::hamiltonian_by_permutation(k4));
  EXPECT_EQ(hamiltonian_cycle(Digraph(1, {})).objective, 0);
}

TEST(FeedbackVertexSetTest, Examples) {
  EXPECT_EQ(min_feedback_vertex_set(Chain3()).objective, 0);
  EXPECT_EQ(min_feedback_vertex_set(C3()).objective, 1);
  const Digraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const ProblemSolution s = min_feedback_vertex_set(two);
  EXPECT_EQ(s.objective, 2);
  EXPECT_TRUE(is_feedback_vertex_set(two, s.vertex_set));
}

TEST(FeedbackArcSetTest, Examples) {
  EXPECT_EQ(min_feedback_arc_set(Chain3()).objective, 0);
  EXPECT_EQ(min_feedback_arc_set(C3()).objective, 1);
  EXPECT_EQ(feedback_arc_ordering_value(C3()), 1);
  const Digraph two_cycle = bidirect(2, {{0, 1}});
  EXPECT_EQ(min_feedback_arc_set(two_cycle).objective, 1);
  EXPECT_EQ(feedback_arc_ordering_value(two_cycle), 1);
}

TEST(FeedbackArcSetTest, SizeLimit) {
  std::vector<Arc> arcs;
  for (int u = 0; u < 10; ++u) {
    for (int v = 0; v < 10; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  EXPECT_THROW(min_feedback_arc_set(Digraph(10, arcs)), SizeLimitExceeded);
  EXPECT_NO_THROW(min_feedback_arc_set(Cycle(12)));
}

TEST(EquivalentSubgraphTest, Examples) {
  const ProblemSolution t = min_equivalent_subgraph(Tournament3());
  EXPECT_EQ(t.arc_set, (std::vector<Arc>{{0, 1}, {1, 2}}));
  EXPECT_EQ(min_equivalent_subgraph(C3()).objective, 3);
  EXPECT_EQ(min_equivalent_subgraph(Chain3()).arc_set, Chain3().arcs());
  const Digraph k4 = bidirect(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(min_equivalent_subgraph(k4).objective, 4);
}

TEST(TransitiveReductionTest, Examples) {
  EXPECT_EQ(transitive_reduction_dag(Tournament3()),
            (std::vector<Arc>{{0, 1}, {1, 2}}));
  EXPECT_EQ(transitive_reduction_dag(Chain3()), Chain3().arcs());
  EXPECT_TRUE(transitive_reduction_dag(Digraph(3, {})).empty());
  EXPECT_THROW(transitive_reduction_dag(C3()), GraphError);
}

TEST(HardProblemOracleTest, AllDigraphsOnFourVertices) {
  for (int n = 0; n <= 4; ++n) {
    DigraphEnumerator all(n);
    for (std::uint64_t i = 0; i < all.count(); ++i) {
      const Digraph d = all.at(i);
      const ProblemSolution fas = min_feedback_arc_set(d);
      ASSERT_EQ(fas.objective, oracle::fas_by_permutation(d)) << to_edge_list(d);
      ASSERT_EQ(fas.objective, feedback_arc_ordering_value(d));
      ASSERT_TRUE(is_feedback_arc_set(d, fas.arc_set));
      const ProblemSolution fvs = min_feedback_vertex_set(d);
      ASSERT_EQ(fvs.objective, oracle::fvs_by_subsets(d));
      ASSERT_TRUE(is_feedback_vertex_set(d, fvs.vertex_set));
      const ProblemSolution ham = hamiltonian_cycle(d);
      ASSERT_EQ(ham.objective == 1, oracle::hamiltonian_by_permutation(d));
      if (ham.objective == 1) ASSERT_TRUE(is_hamiltonian_cycle(d, ham.cycle));
      const ProblemSolution mes = min_equivalent_subgraph(d);
      ASSERT_EQ(mes.objective, oracle::mes_by_subsets(d)) << to_edge_list(d);
      ASSERT_TRUE(is_equivalent_subgraph(d, mes.arc_set));
      ASSERT_EQ(fvs.objective == 0, is_acyclic(d));
      ASSERT_EQ(fas.objective == 0, is_acyclic(d));
    }
  }
}

TEST(HardProblemOracleTest, RandomDigraphsUpToSeven) {
  for (const Digraph& d : Sample(120, 7, 55)) {
    const ProblemSolution fas = min_feedback_arc_set(d);
    EXPECT_EQ(fas.objective, oracle::fas_by_permutation(d)) << to_edge_list(d);
    EXPECT_TRUE(is_feedback_arc_set(d, fas.arc_set));
    EXPECT_EQ(min_feedback_vertex_set(d).objective, oracle::fvs_by_subsets(d));
    EXPECT_EQ(hamiltonian_cycle(d).objective == 1,
              oracle::hamiltonian_by_permutation(d));
    if (is_acyclic(d)) {
      EXPECT_EQ(min_equivalent_subgraph(d).arc_set, transitive_reduction_dag(d));
    }
  }
}

TEST(WitnessValidatorTest, RejectsBadWitnesses) {
  EXPECT_FALSE(is_hamiltonian_cycle(C3(), {0, 2, 1}));
  EXPECT_FALSE(is_hamiltonian_cycle(C3(), {0, 1}));
  EXPECT_FALSE(is_feedback_vertex_set(C3(), VertexSet{}));
  EXPECT_FALSE(is_feedback_arc_set(C3(), {{1, 0}}));
  EXPECT_FALSE(is_equivalent_subgraph(C3(), {{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_equivalent_subgraph(Chain3(), {{0, 1}, {1, 2}, {0, 2}}));
}

TEST(WidthAnnotatedReportTest, Rows) {
  const auto rows = width_annotated_report({{"chain", Chain3()}, {"c3", C3()}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].visible_monotone_copnum, 1);
  EXPECT_EQ(rows[0].inert_monotone_copnum, 1);
  EXPECT_EQ(rows[0].fvs, 0);
  EXPECT_EQ(rows[1].visible_monotone_copnum, 2);
  EXPECT_EQ(rows[1].inert_monotone_copnum, 2);
  EXPECT_EQ(rows[1].fvs, 1);
  EXPECT_EQ(rows[1].fas, 1);
  EXPECT_EQ(rows[1].hamiltonian, true);
  std::ostringstream csv;
  write_width_report_csv(rows, csv);
  EXPECT_EQ(csv.str(),
            "instance,n,m,hamiltonian,fvs,fas,mes,dagwidth,kellywidth,status\n"
            "chain,3,2,no,0,0,2,1,1,ok\n"
            "c3,3,3,yes,1,1,3,2,2,ok\n");
}

TEST(WidthAnnotatedReportTest, EmptyListIsHeaderOnly) {
  std::ostringstream csv, jsonl;
  write_width_report_csv({}, csv);
  write_width_report_jsonl({}, jsonl);
  EXPECT_EQ(csv.str(),
            "instance,n,m,hamiltonian,fvs,fas,mes,dagwidth,kellywidth,status\n");
  EXPECT_EQ(jsonl.str(), "");
}

}  // namespace
}  // namespace copsearch
