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

#include <set>
#include <sstream>

#include "branchpair/analysis.hpp"
#include "branchpair/enumerate.hpp"
#include "branchpair/harness.hpp"
#include "test_util.hpp"

namespace branchpair {
namespace {

using testing::family;

EnumerationTask task(int n, EnumMode mode) {
  EnumerationTask t;
  t.n = n;
  t.mode = mode;
  return t;
}

std::uint64_t count(const EnumerationTask& t) {
  std::uint64_t k = 0;
  for_each_digraph(t, [&](const DiGraph&) {
    ++k;
    return true;
  });
  return k;
}

TEST(Canonical, IsomorphismClassCounts) {
  EXPECT_EQ(count(task(3, EnumMode::Canonical)), 16u);
  EXPECT_EQ(count(task(4, EnumMode::Canonical)), 218u);
  EXPECT_EQ(count(task(5, EnumMode::Canonical)), 9608u);
}

TEST(Canonical, ExhaustiveFourHas218Classes) {
  std::set<std::vector<std::uint64_t>> classes;
  std::uint64_t all = 0;
  for_each_digraph(task(4, EnumMode::Exhaustive), [&](const DiGraph& d) {
    classes.insert(canonical_form(d));
    ++all;
    return true;
  });
  EXPECT_EQ(all, 4096u);
  EXPECT_EQ(classes.size(), 218u);
}

TEST(Canonical, FiltersAreSound) {
  auto ex = task(5, EnumMode::Exhaustive);
  ex.filters.lambda_min = 2;
  std::set<std::vector<std::uint64_t>> from_exhaustive;
  for_each_digraph(ex, [&](const DiGraph& d) {
    EXPECT_GE(arc_connectivity(d), 2);
    from_exhaustive.insert(canonical_form(d));
    return true;
  });
  auto can = ex;
  can.mode = EnumMode::Canonical;
  std::set<std::vector<std::uint64_t>> from_canonical;
  for_each_digraph(can, [&](const DiGraph& d) {
    EXPECT_TRUE(is_canonical(d));
    EXPECT_TRUE(from_canonical.insert(canonical_form(d)).second);
    return true;
  });
  EXPECT_EQ(from_canonical, from_exhaustive);
}

TEST(Canonical, InvariantUnderRelabelling) {
  auto w = family("W").graph;
  std::vector<Vertex> perm = {3, 7, 1, 0, 6, 2, 5, 4};
  EXPECT_EQ(canonical_form(relabel(w, perm)), canonical_form(w));
  EXPECT_NE(canonical_form(family("E4").graph), canonical_form(family("F4").graph));
  EXPECT_THROW(canonical_form(family("H4").graph), Error);
}

TEST(Enumeration, SmallOrdersConfirmed) {
  for (int n : {4, 5}) {
    auto t = task(n, EnumMode::Exhaustive);
    t.filters.delta0_min = 2;
    t.jobs = 2;
    auto s = run_enumeration(t, EnumPredicate::HasGoodPair);
    EXPECT_EQ(s.failures, 0u) << n;
    EXPECT_GT(s.qualifying, 0u);
    EXPECT_EQ(s.checked, s.qualifying);
    EXPECT_FALSE(s.budget_exceeded);
  }
}

TEST(Enumeration, SampledIsReproducibleAcrossJobs) {
  auto t = task(7, EnumMode::Sampled);
  t.filters.lambda_min = 2;
  t.sample_count = 3000;
  t.seed = 42;
  auto one = run_enumeration(t, EnumPredicate::HasGoodPair);
  t.jobs = 4;
  auto four = run_enumeration(t, EnumPredicate::HasGoodPair);
  EXPECT_EQ(one.generated, four.generated);
  EXPECT_EQ(one.qualifying, four.qualifying);
  EXPECT_EQ(one.failures, 0u);
}

TEST(Enumeration, FindsE4) {
  auto t = task(4, EnumMode::Canonical);
  auto s = run_enumeration(t, EnumPredicate::HasGoodPair);
  EXPECT_GT(s.failures, 0u);
  bool saw_e4 = false;
  auto e4 = canonical_form(family("E4").graph);
  for (const auto& d : s.counterexamples) saw_e4 |= canonical_form(d) == e4;
  EXPECT_TRUE(saw_e4 || s.counterexamples.size() == 8);
}

TEST(Enumeration, ModeLimits) {
  EXPECT_THROW(check_task(task(6, EnumMode::Exhaustive)), Error);
  EXPECT_THROW(check_task(task(7, EnumMode::Canonical)), Error);
  EXPECT_THROW(check_task(task(17, EnumMode::Sampled)), Error);
  EXPECT_NO_THROW(check_task(task(16, EnumMode::Sampled)));
}

TEST(CrossValidate, AllOpsAgree) {
  for (const auto& op : cross_validate_ops()) {
    CrossConfig c;
    c.op = op;
    c.instances = 40;
    c.seed = 1;
    if (op == "three_vertex_pair") {
      c.n_min = c.n_max = 3;
    } else if (op == "small_good_pair") {
      c.n_min = 4;
      c.n_max = 6;
    } else if (op == "alpha2_good_pair") {
      c.n_min = 7;
      c.n_max = 10;
    }
    auto s = cross_validate(c);
    EXPECT_EQ(s.mismatches, 0u) << op;
    EXPECT_EQ(s.status(), ReproStatus::Confirmed) << op;
    EXPECT_GT(s.instances, 0u) << op;
  }
  CrossConfig bad;
  bad.op = "nope";
  EXPECT_THROW(cross_validate(bad), Error);
}

TEST(Conjecture, WPrescribedRootsOutsideHypothesis) {
  auto w = family("W");
  auto c = check_conjecture(w.graph, Conjecture::PrescribedRoots3Arc);
  EXPECT_FALSE(c.hypothesis);
  EXPECT_EQ(c.lambda, 2);
  bool saw = false;
  for (auto [s, t] : c.failures) saw |= s == w.vertex("c2") && t == w.vertex("c1");
  EXPECT_TRUE(saw);
}

TEST(Conjecture, BadMultiSameRootFails) {
  auto m = family("BadMulti");
  auto c = check_conjecture(m.graph, Conjecture::SameRootAlpha2);
  EXPECT_FALSE(c.hypothesis);
  bool saw = false;
  for (auto [s, t] : c.failures) saw |= s == m.vertex("s") && t == m.vertex("s");
  EXPECT_TRUE(saw);
}

TEST(Conjecture, SearchFindsNothingSmall) {
  ConjectureConfig c;
  c.instances = 30;
  c.n_min = 5;
  c.n_max = 8;
  auto s = conjecture_search(c);
  EXPECT_TRUE(s.counterexamples.empty());
  EXPECT_EQ(s.status(), ReproStatus::Confirmed);
  EXPECT_EQ(parse_conjecture("same-root-alpha2"), Conjecture::SameRootAlpha2);
  EXPECT_THROW(parse_conjecture("bogus"), Error);
}

TEST(Claims, UnknownClaim) {
  try {
    find_claim("bogus");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClaim);
  }
}

TEST(Claims, FastClaimsConfirmed) {
  for (const char* id : {"prop-W", "prop-small4-E4", "prop-n3", "fig-badmulti", "fig-pairs"}) {
    auto r = verify_claim(id, HarnessConfig{});
    EXPECT_EQ(r.status, ReproStatus::Confirmed) << id;
    std::ostringstream out;
    write_report(out, r);
    EXPECT_NE(out.str().find("STATUS confirmed"), std::string::npos) << id;
  }
}

TEST(Claims, InfAlpha3RefutedWithCut) {
  auto r = verify_claim("prop-infalpha3", HarnessConfig{});
  EXPECT_EQ(r.status, ReproStatus::Refuted);
  bool cut = false;
  for (const auto& c : r.certificates) cut |= c.find("CERT cut") != std::string::npos;
  EXPECT_TRUE(cut);
}

TEST(Claims, TinyBudgetIsReported) {
  HarnessConfig c;
  c.budget_secs = 1e-9;
  auto r = verify_claim("prop-small", c);
  EXPECT_EQ(r.status, ReproStatus::BudgetExceeded);
}

TEST(Status, ExitCodes) {
  EXPECT_EQ(exit_code(ReproStatus::Confirmed), 0);
  EXPECT_EQ(exit_code(ReproStatus::Refuted), 2);
  EXPECT_EQ(exit_code(ReproStatus::BudgetExceeded), 3);
  EXPECT_EQ(worst(ReproStatus::Confirmed, ReproStatus::Refuted), ReproStatus::Refuted);
}

TEST(Cut, WPrimeNine) {
  auto g = family("WPrimeN:9").graph;
  auto [set, leaving] = min_out_cut(g);
  EXPECT_EQ(leaving, 1);
  int out = 0;
  for (const Arc& a : g.arcs()) out += set.contains(a.tail) && !set.contains(a.head) ? a.multiplicity : 0;
  EXPECT_EQ(out, 1);
}

}  // namespace
}  // namespace branchpair
