// Copyright 2026 The branchpair Authors
//
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


#include <gtest/gtest.h>

#include "branchpair/analysis.hpp"
#include "test_util.hpp"

namespace branchpair {
namespace {

using testing::family;

DiGraph complete(int n) {
  ArcList arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return DiGraph::build(n, arcs);
}

DiGraph cycle(int n) {
  ArcList arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return DiGraph::build(n, arcs);
}

VertexSet labelled(const LabeledDigraph& d, std::initializer_list<std::string_view> names) {
  VertexSet s;
  for (Vertex v : d.vertices(names)) s.insert(v);
  return s;
}

TEST(Components, Examples) {
  EXPECT_EQ(strong_components(cycle(2)).count(), 1);
  EXPECT_EQ(strong_components(family("ST4").graph).count(), 1);
  auto tt4 = strong_components(family("TT4").graph);
  EXPECT_EQ(tt4.count(), 4);
  EXPECT_EQ(tt4.initial.size(), 1u);
  EXPECT_EQ(tt4.terminal.size(), 1u);
  EXPECT_FALSE(is_strong(DiGraph::build(3, {{0, 1}, {1, 2}})));
}

TEST(ArcConnectivity, Examples) {
  EXPECT_EQ(arc_connectivity(family("W").graph), 2);
  EXPECT_EQ(arc_connectivity(family("H4").graph), 2);
  EXPECT_EQ(arc_connectivity(DiGraph::build(3, {{0, 1}, {1, 2}})), 0);
  EXPECT_EQ(arc_connectivity(complete(5)), 4);
  EXPECT_EQ(arc_connectivity(cycle(6)), 1);
  EXPECT_TRUE(is_k_arc_strong(family("W").graph, 2));
  EXPECT_FALSE(is_k_arc_strong(family("W").graph, 3));
}

TEST(ArcConnectivity, CountsMultiplicity) {
  auto m = DiGraph::build(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}}, true);
  EXPECT_EQ(arc_connectivity(m), 2);
  EXPECT_EQ(max_flow(m, 0, 1), 2);
}

TEST(Semidegree, Examples) {
  EXPECT_EQ(min_semidegree(complete(3)), 2);
  EXPECT_EQ(min_semidegree(family("E4").graph), 1);
  EXPECT_EQ(min_semidegree(family("H4").graph), 2);
}

TEST(Independence, Examples) {
  auto h4 = independence_number(family("H4").graph);
  EXPECT_EQ(h4.size, 4);
  EXPECT_EQ(h4.witness.size(), 4);
  auto h4g = family("H4").graph;
  for (Vertex u : h4.witness)
    for (Vertex v : h4.witness) EXPECT_FALSE(h4g.has_arc(u, v));
  EXPECT_EQ(independence_number(family("W").graph).size, 2);
  EXPECT_EQ(independence_number(complete(6)).size, 1);
  EXPECT_TRUE(independence_at_most(family("W").graph, 2));
  EXPECT_FALSE(independence_at_most(family("H4").graph, 3));
}

TEST(Semicomplete, Examples) {
  auto st4 = family("ST4");
  auto plus = add_arc(add_arc(st4.graph, st4.vertex("d"), st4.vertex("c")), st4.vertex("c"), st4.vertex("b"));
  EXPECT_TRUE(is_semicomplete(plus));
  EXPECT_FALSE(is_tournament(plus));
  EXPECT_TRUE(is_tournament(st4.graph));
  EXPECT_FALSE(is_semicomplete(family("E4").graph));
}

TEST(CoBipartition, Examples) {
  auto w = family("W");
  auto p = co_bipartition(w.graph);
  ASSERT_TRUE(p);
  auto n = normalized(*p);
  EXPECT_EQ(n.first, labelled(w, {"a1", "b1", "c1", "d1"}));
  EXPECT_EQ(n.second, labelled(w, {"a2", "b2", "c2", "d2"}));
  EXPECT_FALSE(co_bipartition(family("H4").graph));

  auto st4 = co_bipartition(family("ST4").graph);
  ASSERT_TRUE(st4);
  EXPECT_EQ((st4->first | st4->second), VertexSet::all(4));
}

TEST(Generators, Examples) {
  auto tt4 = family("TT4");
  EXPECT_EQ(in_generators(tt4.graph), VertexSet::single(tt4.vertex("a4")));
  EXPECT_EQ(out_generators(tt4.graph), VertexSet::single(tt4.vertex("a1")));
  EXPECT_EQ(in_generators(family("W").graph), VertexSet::all(8));
  auto dm = family("Dminus");
  EXPECT_EQ(out_generators(dm.graph), labelled(dm, {"a1", "a2", "a3"}));
  EXPECT_EQ(in_generators(dm.graph), VertexSet::single(dm.vertex("b")));
}

TEST(Hamiltonian, Paths) {
  auto c5 = hamiltonian_path(cycle(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->size(), 5u);
  auto st4 = family("ST4");
  auto p = hamiltonian_path(st4.graph);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, st4.vertices({"a", "b", "c", "d"}));
  auto w = family("W").graph;
  auto pw = hamiltonian_path(w);
  ASSERT_TRUE(pw);
  ASSERT_EQ(pw->size(), 8u);
  for (std::size_t i = 0; i + 1 < pw->size(); ++i) EXPECT_TRUE(w.has_arc((*pw)[i], (*pw)[i + 1]));
  EXPECT_FALSE(hamiltonian_path(DiGraph::build(3, {{0, 1}, {0, 2}})));
}

TEST(Hamiltonian, CyclesThrough) {
  EXPECT_EQ(hamiltonian_cycle_through(cycle(2), 0), (std::vector<Vertex>{0, 1, 0}));
  auto st4 = family("ST4");
  EXPECT_EQ(hamiltonian_cycle_through(st4.graph, st4.vertex("a"), 4), st4.vertices({"a", "b", "c", "d", "a"}));
  EXPECT_EQ(hamiltonian_cycle_through(st4.graph, st4.vertex("a"), 3), st4.vertices({"a", "c", "d", "a"}));
  try {
    hamiltonian_cycle_through(DiGraph::build(3, {{0, 1}, {1, 2}}), 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSemicomplete);
  }
  try {
    hamiltonian_cycle_through(family("TT4").graph, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStrong);
  }
  try {
    hamiltonian_cycle_through(st4.graph, 0, 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSuchCycle);
  }
}

TEST(Ramsey, Examples) {
  auto k9 = ramsey_witness(complete(9));
  EXPECT_EQ(k9.kind, RamseyWitness::Kind::Clique4);
  EXPECT_EQ(k9.vertices.size(), 4);

  FamilySpec ws = parse_family("WS");
  ws.s = DiGraph::build(1, ArcList{});
  auto g = generate(ws).digraph.graph;
  ASSERT_EQ(g.order(), 25);
  auto r = ramsey_witness(g);
  EXPECT_EQ(r.kind, RamseyWitness::Kind::IndependentTriple);
  ASSERT_EQ(r.vertices.size(), 3);
  for (Vertex u : r.vertices)
    for (Vertex v : r.vertices) EXPECT_FALSE(g.has_arc(u, v));
}

}  // namespace
}  // namespace branchpair
