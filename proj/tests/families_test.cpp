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
#include "branchpair/enumerate.hpp"
#include "test_util.hpp"

namespace branchpair {
namespace {

using testing::family;

TEST(Families, Sizes) {
  auto w = family("W").graph;
  EXPECT_EQ(w.order(), 8);
  EXPECT_EQ(w.arc_count(), 18u);
  auto h4 = family("H4").graph;
  EXPECT_EQ(h4.order(), 10);
  EXPECT_EQ(h4.arc_count(), 20u);
  auto e4 = family("E4").graph;
  EXPECT_EQ(e4.order(), 4);
  EXPECT_EQ(e4.arc_count(), 6u);
}

TEST(Families, WHalvesAndConnectingCycle) {
  auto w = family("W");
  auto h1 = induced(w.graph, VertexSet{0, 1, 2, 3});
  auto h2 = induced(w.graph, VertexSet{4, 5, 6, 7});
  EXPECT_EQ(h1.graph.arc_count(), 7u);
  EXPECT_EQ(h2.graph.arc_count(), 7u);
  EXPECT_TRUE(is_semicomplete(h1.graph));
  EXPECT_TRUE(is_semicomplete(h2.graph));
}

TEST(Families, WPrimeNine) {
  auto g = family("WPrimeN:9").graph;
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(independence_number(g).size, 3);
  // Frozen regression: the single added vertex has in-degree 1.
  EXPECT_EQ(arc_connectivity(g), 1);
}

TEST(Families, WPrimeTenAndUp) {
  for (int n = 10; n <= 12; ++n) {
    auto g = family("WPrimeN:" + std::to_string(n)).graph;
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(arc_connectivity(g), 2) << n;
    EXPECT_EQ(independence_number(g).size, 3) << n;
  }
}

TEST(Families, WSDefault) {
  auto g = family("WS").graph;
  EXPECT_EQ(arc_connectivity(g), 2);
  EXPECT_EQ(independence_number(g).size, 7);
}

TEST(Families, WSSingleVertex) {
  FamilySpec spec = parse_family("WS");
  spec.s = DiGraph::build(1, ArcList{});
  auto g = generate(spec).digraph.graph;
  EXPECT_EQ(g.order(), 25);
  EXPECT_EQ(independence_number(g).size, 7);
  // Frozen regression: each copy of W is left by a single arc.
  EXPECT_EQ(arc_connectivity(g), 1);
}

TEST(Families, NoBranchU) {
  auto u = generate(parse_family("NoBranchU:2"));
  ASSERT_TRUE(u.identified);
  EXPECT_EQ(u.digraph.graph.order(), 28);
  EXPECT_EQ(arc_connectivity(u.digraph.graph), 2);
}

TEST(Families, StrongNotEnough) {
  for (int k = 1; k <= 2; ++k) {
    auto spec = parse_family("StrongNotEnough:" + std::to_string(k));
    auto g = generate(spec).digraph.graph;
    EXPECT_TRUE(is_strong(g));
    EXPECT_GE(min_semidegree(g), k);
    EXPECT_TRUE(sanity(spec).ok());
  }
}

TEST(Families, H4InducesE4Copies) {
  auto h4 = family("H4");
  auto e4 = canonical_form(family("E4").graph);
  for (int i = 1; i <= 5; ++i) {
    int j = i % 5 + 1;
    auto names = {"a" + std::to_string(i), "a" + std::to_string(j), "b" + std::to_string(i), "b" + std::to_string(j)};
    VertexSet s;
    for (const auto& n : names) s.insert(h4.vertex(n));
    EXPECT_EQ(canonical_form(induced(h4.graph, s).graph), e4) << i;
  }
}

TEST(Families, BadMulti) {
  auto m = family("BadMulti");
  EXPECT_TRUE(m.graph.is_multi());
  EXPECT_EQ(m.graph.order(), 6);
  EXPECT_EQ(m.graph.multiplicity(m.vertex("s"), m.vertex("a")), 2);
  EXPECT_EQ(m.graph.multiplicity(m.vertex("e"), m.vertex("s")), 2);
}

TEST(Families, OnlyBadMultiIsMulti) {
  for (const auto& name : family_names()) {
    auto g = family(name).graph;
    EXPECT_EQ(g.is_multi(), name == "BadMulti") << name;
  }
}

TEST(Families, Deterministic) {
  for (const auto& name : family_names()) {
    EXPECT_EQ(family(name).graph, family(name).graph) << name;
    EXPECT_EQ(family(name).labels, family(name).labels) << name;
  }
}

TEST(Families, SanityHoldsExceptWPrimeNine) {
  for (const auto& name : family_names()) {
    auto spec = parse_family(name);
    EXPECT_EQ(sanity(spec).ok(), family_label(spec) != "WPrimeN:9") << name;
  }
}

TEST(Families, ParseErrors) {
  EXPECT_THROW(parse_family("Nope"), Error);
  EXPECT_THROW(parse_family("WPrimeN:x"), Error);
  EXPECT_THROW(generate(parse_family("FourException:9")), Error);
}

TEST(Families, Tournaments) {
  auto r = rotational_tournament(2);
  EXPECT_TRUE(is_tournament(r));
  EXPECT_EQ(min_semidegree(r), 2);
  auto t = near_transitive_tournament(5);
  EXPECT_TRUE(is_tournament(t));
  EXPECT_TRUE(is_strong(t));
}

}  // namespace
}  // namespace branchpair
