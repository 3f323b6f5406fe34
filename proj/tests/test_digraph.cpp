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

#include "copsearch/digraph.hpp"

#include <random>

#include "copsearch/enumerate.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace copsearch {
namespace {

Digraph C3() { return parse_edge_list("n 3\n0 1\n1 2\n2 0\n"); }
Digraph Chain3() { return Digraph(3, {{0, 1}, {1, 2}}); }

TEST(VertexSetTest, SetAlgebra) {
  VertexSet a{0, 2, 5};
  VertexSet b{2, 3};
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a | b, (VertexSet{0, 2, 3, 5}));
  EXPECT_EQ(a & b, (VertexSet{2}));
  EXPECT_EQ(a - b, (VertexSet{0, 5}));
  EXPECT_TRUE((VertexSet{2}).subset_of(a));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_EQ(a.to_string(), "{0,2,5}");
  EXPECT_EQ(a.to_vector(), (std::vector<Vertex>{0, 2, 5}));
  EXPECT_EQ(VertexSet::full(64).size(), 64);
}

TEST(VertexSetTest, LexOrder) {
  EXPECT_TRUE(lex_less({}, {0}));
  EXPECT_TRUE(lex_less({0}, {0, 1}));
  EXPECT_TRUE(lex_less({0, 1}, {1}));
  EXPECT_TRUE(lex_less({0, 2}, {1}));
  EXPECT_FALSE(lex_less({1}, {1}));
  EXPECT_FALSE(lex_less({1}, {0, 5}));
}

TEST(ParseTest, Cycle) {
  const Digraph d = C3();
  EXPECT_EQ(d.vertex_count(), 3);
  EXPECT_EQ(d.arc_count(), 3);
  EXPECT_TRUE(d.has_arc(2, 0));
}

TEST(ParseTest, HeaderOnly) {
  const Digraph d = parse_edge_list("n 1");
  EXPECT_EQ(d.vertex_count(), 1);
  EXPECT_EQ(d.arc_count(), 0);
}

TEST(ParseTest, ImplicitVertexCountAndComments) {
  const Digraph d = parse_edge_list("# comment\n\n0 3\r\n# another\n3 1\n");
  EXPECT_EQ(d.vertex_count(), 4);
  EXPECT_EQ(d.arc_count(), 2);
  EXPECT_EQ(parse_edge_list("").vertex_count(), 0);
}

TEST(ParseTest, Errors) {
  EXPECT_THROW(parse_edge_list("0 0"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 -1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1\nn 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 64\n"), ParseError);
  try {
    parse_edge_list("n 3\n0 1\n1 2\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(ParseTest, ConstructorRejectsNonSimple) {
  EXPECT_THROW(Digraph(2, {{1, 1}}), GraphError);
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), GraphError);
  EXPECT_THROW(Digraph(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Digraph(65, {}), GraphError);
}

TEST(ParseTest, WriterIsSortedAndRoundTrips) {
  const Digraph d(3, {{2, 0}, {0, 2}, {1, 0}});
  EXPECT_EQ(to_edge_list(d), "n 3\n0 2\n1 0\n2 0\n");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = random_digraph(1 + trial % 10, 0.3, rng());
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

TEST(ParseTest, FingerprintIsSha256OfEdgeList) {
  EXPECT_EQ(fingerprint(C3()),
            "a37c97be52b179f33a15c98f440ec23ae6c5cc02717f1cc4688fc77155c6d10a");
  EXPECT_EQ(fingerprint(C3()).size(), 64U);
  EXPECT_NE(fingerprint(C3()), fingerprint(Chain3()));
}

TEST(ReachTest, Examples) {
  EXPECT_EQ(reach(C3(), {0}, {1}), (VertexSet{0}));
  EXPECT_EQ(reach(C3(), {}, {}), VertexSet{});
  EXPECT_EQ(reach(C3(), {0}, {}), (VertexSet{0, 1, 2}));
  EXPECT_EQ(reach(C3(), {0}, {0}), VertexSet{});
}

TEST(ReachTest, MatchesDepthFirstOracleAndLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Digraph d = random_digraph(n, 0.3, rng());
    const auto adj = oracle::adjacency(d);
    const VertexSet s1 = VertexSet::from_bits(rng()) & d.vertices();
    const VertexSet s2 = s1 | (VertexSet::from_bits(rng()) & d.vertices());
    const VertexSet f1 = VertexSet::from_bits(rng() & rng()) & d.vertices();
    const VertexSet f2 = f1 | (VertexSet::from_bits(rng() & rng()) & d.vertices());
    const VertexSet r = reach(d, s1, f1);
    EXPECT_EQ(r.bits(), oracle::reach(adj, s1.bits(), f1.bits()));
    EXPECT_TRUE(r.subset_of(reach(d, s2, f1)));
    EXPECT_TRUE(reach(d, s1, f2).subset_of(r));
    EXPECT_EQ(reach(d, r, f1), r);
    EXPECT_TRUE((s1 - f1).subset_of(r));
    EXPECT_FALSE(r.intersects(f1));
  }
}

TEST(SccTest, Examples) {
  EXPECT_EQ(scc(C3()), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(scc(Chain3()), (std::vector<VertexSet>{{0}, {1}, {2}}));
  const Digraph two(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  EXPECT_EQ(scc(two), (std::vector<VertexSet>{{0, 1}, {2, 3}}));
}

TEST(SccTest, ClassesAreMaximalMutualReachability) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = random_digraph(1 + static_cast<int>(rng() % 9), 0.25, rng());
    const auto closure = transitive_closure(d);
    VertexSet covered;
    for (VertexSet cls : scc(d)) {
      EXPECT_FALSE(cls.intersects(covered));
      covered |= cls;
      const Vertex v = cls.min();
      for (Vertex u = 0; u < d.vertex_count(); ++u) {
        const bool mutual = closure[v].contains(u) && closure[u].contains(v);
        EXPECT_EQ(mutual, cls.contains(u));
      }
    }
    EXPECT_EQ(covered, d.vertices());
  }
}

TEST(AcyclicTest, ExamplesAndOracle) {
  EXPECT_TRUE(is_acyclic(Chain3()));
  EXPECT_FALSE(is_acyclic(C3()));
  EXPECT_TRUE(is_acyclic(Digraph(0, {})));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Digraph d = random_digraph(1 + static_cast<int>(rng() % 8), 0.15, rng());
    const bool expected = !oracle::has_cycle(oracle::adjacency(d));
    EXPECT_EQ(is_acyclic(d), expected);
    EXPECT_EQ(is_acyclic_within(d, d.vertices()), expected);
  }
}

TEST(InducedSubgraphTest, Examples) {
  const InducedSubgraph sub = induced_subgraph(C3(), {0, 1});
  EXPECT_EQ(sub.graph, Digraph(2, {{0, 1}}));
  EXPECT_EQ(sub.original_id, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(induced_subgraph(C3(), C3().vertices()).graph, C3());
  EXPECT_EQ(induced_subgraph(C3(), {}).graph.vertex_count(), 0);
  const InducedSubgraph relabeled = induced_subgraph(C3(), {1, 2});
  EXPECT_EQ(relabeled.graph, Digraph(2, {{0, 1}}));
  EXPECT_EQ(relabeled.original_id, (std::vector<Vertex>{1, 2}));
}

TEST(DeleteArcsTest, Examples) {
  EXPECT_EQ(delete_arcs(C3(), {{2, 0}}), Chain3());
  EXPECT_EQ(delete_arcs(C3(), {}), C3());
  EXPECT_EQ(delete_arcs(C3(), C3().arcs()).arc_count(), 0);
  EXPECT_THROW(delete_arcs(C3(), {{0, 2}}), GraphError);
}

TEST(BidirectTest, Examples) {
  EXPECT_EQ(bidirect(3, {{0, 1}, {1, 2}, {0, 2}}).arc_count(), 6);
  EXPECT_EQ(bidirect(2, {{0, 1}}), Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(bidirect(3, {}).arc_count(), 0);
  EXPECT_THROW(bidirect(2, {{1, 1}}), GraphError);
}

TEST(TransitiveClosureTest, Examples) {
  EXPECT_EQ(transitive_closure(Chain3()),
            (std::vector<VertexSet>{{0, 1, 2}, {1, 2}, {2}}));
  EXPECT_EQ(transitive_closure(Digraph(3, {})),
            (std::vector<VertexSet>{{0}, {1}, {2}}));
  for (VertexSet row : transitive_closure(C3())) {
    EXPECT_EQ(row, (VertexSet{0, 1, 2}));
  }
}

}  // namespace
}  // namespace copsearch
