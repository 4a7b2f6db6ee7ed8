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
#include "branchpair/random.hpp"
#include "branchpair/solvers.hpp"
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

GoodPair sub_pair_on(const DiGraph& d, VertexSet s, GoodPair (*solve)(const DiGraph&)) {
  auto sub = induced(d, s);
  return solve(sub.graph).lifted(sub.to_parent, d.order());
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ConstructionFailed;
}

TEST(NonStrong, TT4SinkAndSource) {
  auto tt4 = family("TT4");
  Vertex r = tt4.vertex("a4"), q = tt4.vertex("a1");
  auto p = semicomplete_nonstrong_pair(tt4.graph, r, q);
  EXPECT_TRUE(validate_good_pair(tt4.graph, p));
  EXPECT_EQ(p.in.root(), r);
  EXPECT_EQ(p.out.root(), q);
}

TEST(NonStrong, DPlusAndDMinus) {
  for (const char* name : {"Dplus", "Dminus"}) {
    auto d = family(name).graph;
    for (Vertex r : in_generators(d)) {
      for (Vertex q : out_generators(d)) {
        auto p = semicomplete_nonstrong_pair(d, r, q);
        EXPECT_TRUE(validate_good_pair(d, p)) << name;
        EXPECT_EQ(p.in.root(), r);
        EXPECT_EQ(p.out.root(), q);
      }
    }
  }
}

TEST(NonStrong, FiveVertexChain) {
  // q -> {u, v, w} -> r with u, v, w a 3-cycle and q -> r
  enum { q, u, v, w, r };
  auto d = DiGraph::build(5, {{q, u}, {q, v}, {q, w}, {q, r}, {u, v}, {v, w}, {w, u}, {u, r}, {v, r}, {w, r}});
  auto p = semicomplete_nonstrong_pair(d, r, q);
  EXPECT_TRUE(validate_good_pair(d, p));
  EXPECT_EQ(p.in.root(), r);
  EXPECT_EQ(p.out.root(), q);
}

TEST(NonStrong, Refusals) {
  auto st4 = family("ST4").graph;
  EXPECT_EQ(code_of([&] { semicomplete_nonstrong_pair(st4, 0, 1); }), ErrorCode::PreconditionViolated);
  auto tt4 = family("TT4");
  EXPECT_EQ(code_of([&] { semicomplete_nonstrong_pair(tt4.graph, tt4.vertex("a1"), tt4.vertex("a1")); }),
            ErrorCode::PreconditionViolated);
}

TEST(Util, ST4PlusDominatingVertex) {
  auto st4 = family("ST4");
  ArcList arcs;
  for (const Arc& a : st4.graph.arcs()) arcs.emplace_back(a.tail, a.head);
  for (Vertex v = 0; v < 4; ++v) arcs.emplace_back(4, v);
  auto d = DiGraph::build(5, arcs);
  Vertex b = st4.vertex("b");
  auto sub = semicomplete_good_r_pair(st4.graph, b);
  ASSERT_TRUE(sub.found());
  auto sub_lifted = sub.pair->lifted(std::vector<Vertex>{0, 1, 2, 3}, 5);
  auto p = semicomplete_util_extend(d, b, VertexSet::all(4), sub_lifted);
  EXPECT_TRUE(validate_good_pair(d, p));
  EXPECT_EQ(p.in.root(), b);
}

TEST(Util, ThreeAbsorptions) {
  ArcList arcs = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}};
  for (Vertex s = 0; s < 3; ++s) arcs.emplace_back(3, s);
  arcs.insert(arcs.end(), {{0, 4}, {4, 1}, {4, 2}, {0, 5}, {1, 5}, {5, 2}, {3, 4}, {4, 5}, {5, 3}});
  auto d = DiGraph::build(6, arcs);
  ASSERT_TRUE(is_semicomplete(d));
  auto sub = sub_pair_on(d, VertexSet{0, 1, 2}, three_vertex_pair);
  Vertex r = sub.in.root();
  auto p = semicomplete_util_extend(d, r, VertexSet{0, 1, 2}, sub);
  EXPECT_TRUE(validate_good_pair(d, p));
  EXPECT_EQ(p.in.root(), r);
}

TEST(RPair, ST4) {
  auto st4 = family("ST4");
  auto a = semicomplete_good_r_pair(st4.graph, st4.vertex("a"));
  EXPECT_EQ(a.kind, CertificateKind::Exception);
  ASSERT_TRUE(a.exception);
  EXPECT_EQ(a.exception->y, st4.vertex("d"));
  EXPECT_EQ(a.exception->z, st4.vertex("c"));

  for (const char* r : {"b", "c", "d"}) {
    auto c = semicomplete_good_r_pair(st4.graph, st4.vertex(r));
    ASSERT_TRUE(c.found()) << r;
    EXPECT_TRUE(validate_good_pair(st4.graph, *c.pair));
    EXPECT_EQ(c.pair->in.root(), st4.vertex(r));
  }
}

TEST(RPair, ST4DrawnPairForD) {
  auto st4 = family("ST4");
  auto c = semicomplete_good_r_pair(st4.graph, st4.vertex("d"));
  ASSERT_TRUE(c.found());
  using testing::arc;
  auto arcs_of = [](const Branching& b) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Arc& a : b.arcs()) out.emplace_back(a.tail, a.head);
    return out;
  };
  std::vector<std::pair<Vertex, Vertex>> in = {arc(st4, "a", "b"), arc(st4, "b", "c"), arc(st4, "c", "d")};
  std::vector<std::pair<Vertex, Vertex>> out = {arc(st4, "a", "c"), arc(st4, "d", "a"), arc(st4, "d", "b")};
  std::sort(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  EXPECT_EQ(arcs_of(c.pair->in), in);
  EXPECT_EQ(arcs_of(c.pair->out), out);
}

TEST(RPair, ST4PlusBA) {
  auto st4 = family("ST4");
  auto d = add_arc(st4.graph, st4.vertex("b"), st4.vertex("a"));
  auto c = semicomplete_good_r_pair(d, st4.vertex("a"));
  ASSERT_TRUE(c.found());
  EXPECT_TRUE(validate_good_pair(d, *c.pair));
}

TEST(RPair, RandomAgreesWithExceptionAndOracle) {
  int checked = 0;
  for (std::uint64_t i = 0; checked < 40 && i < 2000; ++i) {
    auto rng = make_rng(7, i);
    auto d = random_semicomplete(8, rng);
    if (!is_strong(d)) continue;
    for (Vertex r = 0; r < 8; ++r) {
      auto c = semicomplete_good_r_pair(d, r);
      EXPECT_EQ(c.kind == CertificateKind::Exception, is_exception(d, r).has_value());
      if (c.found()) {
        EXPECT_TRUE(validate_good_pair(d, *c.pair));
        EXPECT_EQ(c.pair->in.root(), r);
      }
      if (d.in_degree(r) >= 2) {
        EXPECT_TRUE(c.found());
      }
    }
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(AnyPair, Semicomplete) {
  auto st4 = family("ST4");
  auto p = semicomplete_good_pair(st4.graph);
  EXPECT_TRUE(validate_good_pair(st4.graph, p));
  EXPECT_NE(p.in.root(), st4.vertex("a"));
  EXPECT_TRUE(validate_good_pair(complete(4), semicomplete_good_pair(complete(4))));
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = make_rng(11, i);
    auto t = random_semicomplete(7, rng, 0.0);
    ASSERT_TRUE(is_tournament(t));
    auto q = semicomplete_good_pair(t);
    EXPECT_TRUE(validate_good_pair(t, q));
    EXPECT_TRUE(testing::has_pair(t));
  }
}

TEST(Buffer, EmptySetIsIdentity) {
  auto f4 = generate(parse_family("F4"));
  EXPECT_EQ(extend_by_buffer(f4.digraph.graph, VertexSet{}, *f4.drawn_pair), *f4.drawn_pair);
}

TEST(Buffer, F4PlusVertex) {
  auto f4 = generate(parse_family("F4"));
  auto g = f4.digraph.graph;
  ArcList arcs;
  for (const Arc& a : g.arcs()) arcs.emplace_back(a.tail, a.head);
  arcs.insert(arcs.end(), {{4, 0}, {4, 2}, {1, 4}, {3, 4}});
  auto d = DiGraph::build(5, arcs);
  auto sub = f4.drawn_pair->lifted(std::vector<Vertex>{0, 1, 2, 3}, 5);
  auto p = extend_by_buffer(d, VertexSet{4}, sub);
  EXPECT_TRUE(validate_good_pair(d, p));
}

TEST(Buffer, Violation) {
  auto f4 = generate(parse_family("F4"));
  ArcList arcs;
  for (const Arc& a : f4.digraph.graph.arcs()) arcs.emplace_back(a.tail, a.head);
  arcs.emplace_back(4, 0);
  auto d = DiGraph::build(5, arcs);
  auto sub = f4.drawn_pair->lifted(std::vector<Vertex>{0, 1, 2, 3}, 5);
  EXPECT_EQ(code_of([&] { extend_by_buffer(d, VertexSet{4}, sub); }), ErrorCode::PreconditionViolated);
}

TEST(ThreeVertex, PathExample) {
  // 2-cycle a b a plus bc and ca
  auto d = DiGraph::build(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  EXPECT_TRUE(validate_good_pair(d, three_vertex_pair(d)));
  auto r = reverse(d);
  EXPECT_TRUE(validate_good_pair(r, three_vertex_pair(r)));
  EXPECT_EQ(code_of([] { three_vertex_pair(DiGraph::build(3, {{0, 1}, {1, 2}, {2, 0}})); }),
            ErrorCode::PreconditionViolated);
}

TEST(ThreeGood, CompleteSix) {
  auto d = complete(6);
  auto sub = sub_pair_on(d, VertexSet{0, 1, 2}, three_vertex_pair);
  EXPECT_TRUE(validate_good_pair(d, lemma_3good(d, VertexSet{0, 1, 2}, sub)));
}

TEST(Small, Examples) {
  auto e4 = small_good_pair(family("E4").graph);
  EXPECT_FALSE(e4.found());
  auto f4 = family("F4").graph;
  auto c = small_good_pair(f4);
  ASSERT_TRUE(c.found());
  EXPECT_TRUE(validate_good_pair(f4, *c.pair));
  auto six = family("Fig6Vertex:0").graph;
  auto s = small_good_pair(six);
  ASSERT_TRUE(s.found());
  EXPECT_TRUE(validate_good_pair(six, *s.pair));
  EXPECT_EQ(code_of([] { small_good_pair(complete(7)); }), ErrorCode::PreconditionViolated);
}

TEST(Small, SixVertexTwoArcStrong) {
  int seen = 0;
  for (std::uint64_t i = 0; seen < 50 && i < 5000; ++i) {
    auto rng = make_rng(3, i);
    auto d = random_digraph(6, 0.5, rng);
    if (arc_connectivity(d) < 2) continue;
    auto c = small_good_pair(d);
    ASSERT_TRUE(c.found());
    EXPECT_TRUE(validate_good_pair(d, *c.pair));
    ++seen;
  }
  EXPECT_EQ(seen, 50);
}

TEST(CoBipartite, SixCycle) {
  // 3-cycles a1 a2 a3 and b1 b2 b3; cross arcs a1 b1 a2 b2 a3 b3 a1
  enum { a1, a2, a3, b1, b2, b3 };
  auto d = DiGraph::build(6, {{a1, a2}, {a2, a3}, {a3, a1}, {b1, b2}, {b2, b3}, {b3, b1},
                              {a1, b1}, {b1, a2}, {a2, b2}, {b2, a3}, {a3, b3}, {b3, a1}});
  ASSERT_EQ(arc_connectivity(d), 2);
  ASSERT_TRUE(co_bipartition(d));
  EXPECT_TRUE(validate_good_pair(d, cobipartite_good_pair(d)));
}

TEST(CoBipartite, W) {
  auto w = family("W").graph;
  auto r = cobipartite_report(w);
  ASSERT_TRUE(r.pair);
  EXPECT_TRUE(r.validated);
  EXPECT_TRUE(validate_good_pair(w, *r.pair));
  EXPECT_EQ(code_of([] { cobipartite_good_pair(family("H4").graph); }), ErrorCode::PreconditionViolated);
}

TEST(CoBipartite, Random) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto rng = make_rng(5, i);
    auto d = sample_cobipartite(4 + static_cast<int>(i % 7), 2, rng);
    ASSERT_TRUE(d);
    EXPECT_TRUE(validate_good_pair(*d, cobipartite_good_pair(*d)));
  }
}

TEST(Alpha2, Examples) {
  auto k5 = alpha2_good_pair(complete(5));
  ASSERT_TRUE(k5.pair);
  EXPECT_LE(k5.stage, 2);
  EXPECT_EQ(k5.strategy, Strategy::Alpha2Pipeline);

  auto w = family("W").graph;
  auto r = alpha2_good_pair(w);
  ASSERT_TRUE(r.pair);
  EXPECT_TRUE(r.validated);
  EXPECT_TRUE(validate_good_pair(w, *r.pair));

  EXPECT_EQ(code_of([] { alpha2_good_pair(family("H4").graph); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { alpha2_good_pair(family("ST4").graph); }), ErrorCode::PreconditionViolated);
}

TEST(Alpha2, RandomTenVertex) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    auto rng = make_rng(9, i);
    auto d = sample_alpha2(10, 2, rng);
    ASSERT_TRUE(d);
    auto r = alpha2_good_pair(*d);
    ASSERT_TRUE(r.pair);
    EXPECT_TRUE(validate_good_pair(*d, *r.pair));
    EXPECT_GE(r.stage, 1);
    EXPECT_LE(r.stage, 6);
  }
}

TEST(Alpha2, Deterministic) {
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto rng = make_rng(13, i);
    auto d = sample_alpha2(9, 2, rng);
    ASSERT_TRUE(d);
    EXPECT_EQ(report_text(alpha2_good_pair(*d)), report_text(alpha2_good_pair(*d)));
  }
}

}  // namespace
}  // namespace branchpair
