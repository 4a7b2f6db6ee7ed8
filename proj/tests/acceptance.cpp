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


// Acceptance gate: one PASS/FAIL line per criterion, details indented below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "branchpair/analysis.hpp"
#include "branchpair/enumerate.hpp"
#include "branchpair/harness.hpp"
#include "branchpair/solvers.hpp"
#include "test_util.hpp"

namespace bp = branchpair;
using bp::testing::family;

namespace {

struct Gate {
  std::vector<std::string> notes;
  bool ok = true;

  void check(bool cond, const std::string& what) {
    notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    ok = ok && cond;
  }
  void info(const std::string& what) { notes.push_back("info " + what); }
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string n(std::uint64_t v) { return std::to_string(v); }

void c1(Gate& g) {
  auto e4 = bp::oracle_good_pair(family("E4").graph);
  g.check(!e4.found(), "E4: no good pair");
  auto f4d = family("F4").graph;
  auto f4 = bp::oracle_good_pair(f4d);
  g.check(f4.found() && bp::validate_good_pair(f4d, *f4.pair), "F4: validated good pair");
}

void c2(Gate& g) {
  const std::pair<bp::Vertex, bp::Vertex> pairs[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int digraphs = 0, tournaments = 0, strong_tournaments = 0, cases = 0, disagreements = 0, exceptions = 0,
      four_exceptions = 0, exception_mismatch = 0;
  for (int code = 0; code < 729; ++code) {
    bp::ArcList arcs;
    bool tour = true;
    for (int i = 0, c = code; i < 6; ++i, c /= 3) {
      auto [u, v] = pairs[i];
      if (c % 3 != 1) arcs.emplace_back(u, v);
      if (c % 3 != 0) arcs.emplace_back(v, u);
      tour = tour && c % 3 != 2;
    }
    auto d = bp::DiGraph::build(4, arcs);
    ++digraphs;
    tournaments += tour;
    strong_tournaments += tour && bp::is_strong(d);
    for (bp::Vertex r : bp::in_generators(d)) {
      ++cases;
      auto c = bp::semicomplete_good_r_pair(d, r);
      bool oracle = bp::oracle_good_pair(d, r).found();
      if (c.found() != oracle || (c.found() && !bp::validate_good_pair(d, *c.pair))) ++disagreements;
      if (c.kind == bp::CertificateKind::Exception) {
        ++exceptions;
        if (!bp::is_exception(d, r)) ++exception_mismatch;
      }
      four_exceptions += bp::is_4_exception(d, r);
    }
  }
  g.check(digraphs == 729, "semicomplete digraphs on 4 labelled vertices: " + std::to_string(digraphs));
  g.info("labelled tournaments " + std::to_string(tournaments) + ", strong " + std::to_string(strong_tournaments) +
         ", (D,r) cases " + std::to_string(cases) + ", exceptions " + std::to_string(exceptions) +
         ", 4-exceptions " + std::to_string(four_exceptions));
  g.check(disagreements == 0, "constructive vs oracle disagreements: " + std::to_string(disagreements));
  g.check(exception_mismatch == 0 && exceptions == four_exceptions, "refusals are exactly the 4-exceptions");

  for (int v = 0; v <= 3; ++v) {
    auto d = family("FourException:" + std::to_string(v));
    auto c = bp::semicomplete_good_r_pair(d.graph, d.vertex("a"));
    g.check(c.kind == bp::CertificateKind::Exception && !bp::oracle_good_pair(d.graph, d.vertex("a")).found(),
            "4-exception variant " + std::to_string(v) + ": refusal, oracle agrees");
  }
  auto st4 = family("ST4");
  g.check(bp::semicomplete_good_r_pair(st4.graph, st4.vertex("a")).kind == bp::CertificateKind::Exception,
          "(ST4,a): exception refusal");
  for (const char* r : {"b", "c", "d"}) {
    auto c = bp::semicomplete_good_r_pair(st4.graph, st4.vertex(r));
    g.check(c.found() && bp::validate_good_pair(st4.graph, *c.pair) && c.pair->in.root() == st4.vertex(r),
            std::string("(ST4,") + r + "): validated pair");
  }
}

void c3(Gate& g) {
  auto w = family("W");
  auto c = bp::oracle_good_pair(w.graph, w.vertex("c1"), w.vertex("c2"));
  g.check(c.kind == bp::CertificateKind::ExhaustedSearch, "W: no arc-disjoint B+_c2, B-_c1 (nodes " +
                                                              n(c.stats.nodes) + ")");
  auto r = bp::alpha2_good_pair(w.graph);
  g.check(r.pair && r.validated && bp::validate_good_pair(w.graph, *r.pair),
          "W: alpha2_good_pair validated, stage " + std::to_string(r.stage));
}

void c4(Gate& g) {
  auto h = family("H4").graph;
  g.check(h.order() == 10 && h.arc_count() == 20, "H4: 10 vertices, 20 arcs");
  g.check(bp::arc_connectivity(h) == 2, "H4: lambda = 2");
  g.check(bp::independence_number(h).size == 4, "H4: alpha = 4");
  auto c = bp::oracle_good_pair(h, std::nullopt, std::nullopt, bp::OracleBudget::within(std::chrono::minutes(10)));
  g.check(c.kind == bp::CertificateKind::ExhaustedSearch, "H4: no good pair for any roots (nodes " +
                                                              n(c.stats.nodes) + ")");
}

bp::EnumSummary enumerate(int order, bp::EnumMode mode, std::uint64_t samples = 0) {
  bp::EnumerationTask t;
  t.n = order;
  t.mode = mode;
  t.jobs = jobs();
  if (mode == bp::EnumMode::Exhaustive) {
    t.filters.delta0_min = 2;
  } else {
    t.filters.lambda_min = 2;
  }
  if (samples) t.sample_count = samples;
  return bp::run_enumeration(t, bp::EnumPredicate::HasGoodPair);
}

void c5(Gate& g) {
  for (int order = 3; order <= 5; ++order) {
    auto s = enumerate(order, bp::EnumMode::Exhaustive);
    g.check(s.failures == 0 && !s.budget_exceeded,
            "n=" + std::to_string(order) + " delta0>=2: " + n(s.checked) + " digraphs, " + n(s.failures) +
                " failures");
  }
}

void c6(Gate& g) {
  auto can = enumerate(6, bp::EnumMode::Canonical);
  g.check(can.failures == 0 && can.checked > 0,
          "n=6 lambda>=2 canonical: " + n(can.checked) + " classes, " + n(can.failures) + " failures");
  auto smp = enumerate(6, bp::EnumMode::Sampled, 1000000);
  g.check(smp.failures == 0 && smp.checked == 1000000,
          "n=6 lambda>=2 sampled: " + n(smp.checked) + " instances, " + n(smp.failures) + " failures");
}

void cross(Gate& g, const std::string& op, std::uint64_t count, int lo, int hi) {
  bp::CrossConfig c;
  c.op = op;
  c.instances = count;
  c.n_min = lo;
  c.n_max = hi;
  c.oracle_max_n = 10;
  c.run.jobs = jobs();
  auto s = bp::cross_validate(c);
  g.check(s.constructive_pairs == count && s.sampling_failures == 0,
          op + ": constructive pairs " + n(s.constructive_pairs) + "/" + n(count));
  g.check(s.mismatches == 0 && s.oracle_checked > 0,
          op + ": oracle checked " + n(s.oracle_checked) + ", mismatches " + n(s.mismatches));
  std::string routes;
  for (const auto& [route, k] : s.routes) routes += (routes.empty() ? "" : ", ") + route + " " + n(k);
  g.info("routes: " + routes);
}

void c7(Gate& g) { cross(g, "alpha2_good_pair", 1000, 7, 12); }
void c8(Gate& g) { cross(g, "cobipartite_good_pair", 500, 4, 10); }

void c9(Gate& g) {
  struct Expect {
    const char* family;
    int lambda;
    int alpha;  // 0: not stated
  };
  for (auto e : {Expect{"W", 2, 0}, Expect{"H4", 2, 4}, Expect{"WPrimeN:9", 2, 3}, Expect{"WS", 2, 7},
                 Expect{"NoBranchU:2", 2, 0}}) {
    auto d = family(e.family).graph;
    int lambda = bp::arc_connectivity(d);
    g.check(lambda == e.lambda, std::string(e.family) + ": lambda " + std::to_string(lambda) + ", stated " +
                                    std::to_string(e.lambda));
    if (e.alpha) {
      int alpha = bp::independence_number(d).size;
      g.check(alpha == e.alpha, std::string(e.family) + ": alpha " + std::to_string(alpha) + ", stated " +
                                    std::to_string(e.alpha));
    }
  }
  auto w10 = family("WPrimeN:10").graph;
  g.info("WPrimeN:10: lambda " + std::to_string(bp::arc_connectivity(w10)) + ", alpha " +
         std::to_string(bp::independence_number(w10).size));
}

void c10(Gate& g) {
  auto m = family("BadMulti");
  auto s = m.vertex("s");
  auto c = bp::oracle_good_pair(m.graph, s, s);
  g.check(m.graph.is_multi() && c.kind == bp::CertificateKind::ExhaustedSearch,
          "BadMulti: no arc-disjoint B+_s, B-_s");
}

void c11(Gate& g) {
  for (const auto& name : bp::property_names()) {
    auto r = bp::check_property(name, 1000, 1);
    g.check(r.ok() && r.cases > 0, name + ": " + n(r.cases) + " cases, " + n(r.failures) + " failures" +
                                       (r.ok() ? "" : " (" + r.first_failure + ")"));
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_secs;
  void (*run)(Gate&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "E4 has no good pair, F4 has one", 1, c1},
      {2, "order-4 semicomplete digraphs: solver agrees with oracle", 10, c2},
      {3, "W: no (c1,c2)-rooted pair, unrestricted pair constructed", 30, c3},
      {4, "H4 has no good pair", 600, c4},
      {5, "every digraph with n <= 5 and delta0 >= 2 has a good pair", 3600, c5},
      {6, "every 6-vertex 2-arc-strong digraph has a good pair", 600, c6},
      {7, "alpha <= 2 <= lambda: pipeline pairs, n 7..12", 1800, c7},
      {8, "co-bipartite lambda >= 2: constructive pairs, n 4..10", 900, c8},
      {9, "family sanity against stated values", 60, c9},
      {10, "BadMulti: no arc-disjoint branchings at s", 5, c10},
      {11, "property suites", 300, c11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Gate g;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(g);
    } catch (const std::exception& e) {
      g.check(false, std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    g.check(secs <= c.budget_secs, "time " + std::to_string(secs) + " s within " + std::to_string(c.budget_secs) +
                                       " s");
    failed += !g.ok;
    std::printf("%s criterion %d: %s (%.2f s)\n", g.ok ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& note : g.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
