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

#include <algorithm>

#include "branchpair/digraph.hpp"
#include "branchpair/io.hpp"
#include "test_util.hpp"

namespace branchpair {
namespace {

using testing::family;

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ConstructionFailed;
}

TEST(Build, TwoCycle) {
  auto d = DiGraph::build(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(d.order(), 2);
  EXPECT_EQ(d.arc_count(), 2u);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_TRUE(d.has_arc(1, 0));
}

TEST(Build, E4HasSixArcs) {
  // y<->x, x'<->y', x->y', x'->y
  auto d = DiGraph::build(4, {{0, 1}, {1, 0}, {3, 2}, {2, 3}, {1, 2}, {3, 0}});
  EXPECT_EQ(d.arc_count(), 6u);
  EXPECT_EQ(d, family("E4").graph);
}

TEST(Build, Errors) {
  EXPECT_EQ(code_of([] { DiGraph::build(3, {{0, 0}}); }), ErrorCode::LoopArc);
  EXPECT_EQ(code_of([] { DiGraph::build(3, {{0, 3}}); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { DiGraph::build(3, {{0, 1}, {0, 1}}); }), ErrorCode::DuplicateArcInSimpleDigraph);
  auto m = DiGraph::build(3, {{0, 1}, {0, 1}}, true);
  EXPECT_EQ(m.multiplicity(0, 1), 2);
  EXPECT_EQ(m.out_degree(0), 2);
  EXPECT_EQ(m.total_multiplicity(), 2);
}

TEST(Induced, E4TwoCycle) {
  auto e4 = family("E4");
  auto sub = induced(e4.graph, VertexSet{e4.vertex("y"), e4.vertex("x")});
  EXPECT_EQ(sub.graph, DiGraph::build(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(sub.lift(VertexSet{0, 1}), (VertexSet{e4.vertex("y"), e4.vertex("x")}));
}

TEST(Induced, WholeVertexSetIsIdentity) {
  auto w = family("W").graph;
  EXPECT_EQ(induced(w, w.vertices()).graph, w);
}

TEST(Induced, Errors) {
  auto w = family("W").graph;
  EXPECT_EQ(code_of([&] { induced(w, VertexSet{}); }), ErrorCode::EmptySubset);
  EXPECT_EQ(code_of([&] { induced(w, VertexSet{0, 9}); }), ErrorCode::VertexOutOfRange);
}

TEST(Reverse, Examples) {
  auto c2 = DiGraph::build(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(reverse(c2), c2);
  EXPECT_EQ(reverse(DiGraph::build(3, {{0, 1}, {1, 2}})), DiGraph::build(3, {{2, 1}, {1, 0}}));

  auto st4 = family("ST4");
  auto r = reverse(st4.graph);
  using testing::arc;
  std::vector<std::pair<Vertex, Vertex>> want = {arc(st4, "b", "a"), arc(st4, "c", "b"), arc(st4, "d", "c"),
                                                 arc(st4, "a", "d"), arc(st4, "c", "a"), arc(st4, "b", "d")};
  EXPECT_EQ(r, DiGraph::build(4, want));
  EXPECT_EQ(reverse(r), st4.graph);
}

TEST(Mutation, AddRemoveRoundTrip) {
  auto w = family("W").graph;
  EXPECT_FALSE(w.has_arc(0, 7));
  auto w2 = add_arc(w, 0, 7);
  EXPECT_TRUE(w2.has_arc(0, 7));
  EXPECT_EQ(remove_arc(w2, 0, 7), w);
  EXPECT_EQ(code_of([&] { remove_arc(w, 0, 7); }), ErrorCode::ArcAbsent);
}

TEST(Mutation, RemovePathArcs) {
  auto w = family("W").graph;
  std::vector<std::pair<Vertex, Vertex>> path = {{0, 1}, {1, 2}, {2, 3}};
  auto r = remove_arcs(w, path);
  EXPECT_EQ(r.arc_count(), w.arc_count() - 3);
  for (auto [u, v] : path) EXPECT_FALSE(r.has_arc(u, v));
}

TEST(Mutation, MultiAddRaisesMultiplicity) {
  auto m = DiGraph::build(2, {{0, 1}}, true);
  auto m2 = add_arc(m, 0, 1);
  EXPECT_EQ(m2.multiplicity(0, 1), 2);
  EXPECT_EQ(remove_arc(m2, 0, 1), m);
}

TEST(Io, EmitTwoCycle) {
  EXPECT_EQ(emit_text(DiGraph::build(2, {{0, 1}, {1, 0}})), "digraph\n2\n0 1\n1 0\n");
}

TEST(Io, RoundTripW) {
  auto w = family("W");
  EXPECT_EQ(parse_text(emit_text(w.graph)), w.graph);
  auto back = parse_labeled_text(emit_text(w));
  EXPECT_EQ(back.graph, w.graph);
  EXPECT_EQ(back.labels, w.labels);
}

TEST(Io, RoundTripMulti) {
  auto m = family("BadMulti").graph;
  auto back = parse_text(emit_text(m));
  EXPECT_TRUE(back.is_multi());
  EXPECT_EQ(back, m);
}

TEST(Io, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_text("digraph\n2\n0 2\n"); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { parse_text("digraph\nx\n"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_text("digraph\n2\n0 0\n"); }), ErrorCode::LoopArc);
}

TEST(Io, DotHighlightsPair) {
  auto f4 = generate(parse_family("F4"));
  ASSERT_TRUE(f4.drawn_pair);
  auto dot = emit_dot(f4.digraph, f4.drawn_pair);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("color"), std::string::npos);
}

}  // namespace
}  // namespace branchpair
