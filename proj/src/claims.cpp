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

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>

#include "branchpair/analysis.hpp"
#include "branchpair/families.hpp"
#include "branchpair/figures.hpp"
#include "branchpair/harness.hpp"
#include "branchpair/io.hpp"
#include "branchpair/oracle.hpp"
#include "branchpair/solvers.hpp"

namespace branchpair {

namespace {

using Clock = std::chrono::steady_clock;

// Bookkeeping for one claim run.
class Run {
 public:
  Run(std::string id, std::string statement, const HarnessConfig& config) : config_(config), start_(Clock::now()) {
    report_.claim = std::move(id);
    report_.statement = std::move(statement);
    deadline_ = RunBudget{config.budget_secs, std::nullopt}.deadline_from(start_);
  }

  void stat(std::string s) { report_.stats.push_back(std::move(s)); }
  void cert(std::string s) { report_.certificates.push_back(std::move(s)); }
  void refute(std::string why) {
    report_.status = ReproStatus::Refuted;
    cert("CERT refutation " + why);
  }
  void merge(ReproStatus s) { report_.status = worst(report_.status, s); }
  void out_of_budget(const std::string& where) {
    merge(ReproStatus::BudgetExceeded);
    stat("budget_exceeded_at=" + where);
  }

  OracleBudget oracle() const {
    OracleBudget b;
    b.max_vertices = 16;
    b.deadline = deadline_;
    return b;
  }
  // Remaining wall-clock for a sub-run.
  HarnessConfig sub() const {
    HarnessConfig c = config_;
    if (deadline_) c.budget_secs = std::max(0.001, std::chrono::duration<double>(*deadline_ - Clock::now()).count());
    return c;
  }
  const HarnessConfig& config() const { return config_; }

  ReproReport finish() {
    report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  HarnessConfig config_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  ReproReport report_;
};

LabeledDigraph family(std::string_view name) { return generate(parse_family(name)).digraph; }

std::string sanity_line(const SanityReport& r) {
  std::ostringstream out;
  out << "family=" << r.family;
  for (const SanityCheck& c : r.checks) {
    out << ' ' << c.quantity << '=' << c.computed << (c.at_least ? " claimed>=" : " claimed=") << c.claimed;
  }
  out << (r.ok() ? " ok" : " MISMATCH");
  return out.str();
}

// Sanity of one family; a mismatch refutes with a witness when lambda is low.
void check_family(Run& run, std::string_view name) {
  const FamilySpec spec = parse_family(name);
  const SanityReport r = sanity(spec);
  run.stat(sanity_line(r));
  if (r.ok()) return;
  std::ostringstream why;
  why << r.family << ':';
  for (const SanityCheck& c : r.checks) {
    if (!c.ok()) why << ' ' << c.quantity << '=' << c.computed << " (stated " << c.claimed << ')';
  }
  run.refute(why.str());
  const LabeledDigraph d = generate(spec).digraph;
  for (const SanityCheck& c : r.checks) {
    if (c.ok() || c.quantity != "lambda" || d.graph.order() > 20) continue;
    const auto [x, leaving] = min_out_cut(d.graph);
    std::ostringstream cut;
    cut << "CERT cut family=" << r.family << " leaving=" << leaving << " X=";
    bool first = true;
    for (Vertex v : x) {
      cut << (first ? "" : ",") << d.name(v);
      first = false;
    }
    run.cert(cut.str());
  }
}

// Oracle must find no pair with the given roots.
void expect_no_pair(Run& run, const LabeledDigraph& d, std::optional<Vertex> in, std::optional<Vertex> out,
                    const std::string& what) {
  try {
    const Certificate c = oracle_good_pair(d.graph, in, out, run.oracle());
    run.cert(transcript(c, &d));
    run.stat(what + " branchings=" + std::to_string(c.stats.branchings) + " nodes=" + std::to_string(c.stats.nodes));
    if (c.found()) run.refute(what + ": the oracle found a pair");
  } catch (const BudgetExceeded&) {
    run.out_of_budget(what);
  }
}

void fold_enumeration(Run& run, const EnumSummary& s) {
  std::ostringstream out;
  write_summary(out, s);
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("STAT ", 0) == 0) run.stat(line.substr(5));
  }
  for (const DiGraph& d : s.counterexamples) run.cert("CERT counterexample\n" + emit_text(d));
  if (s.failures > 0) run.refute(std::to_string(s.failures) + " digraphs without a good pair");
  if (s.budget_exceeded) run.out_of_budget("enumeration n=" + std::to_string(s.task.n));
}

void fold_cross(Run& run, const CrossSummary& s) {
  std::ostringstream out;
  write_summary(out, s);
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("STAT ", 0) == 0) run.stat(line.substr(5));
  }
  for (const std::string& d : s.dumps) run.cert(d);
  if (s.mismatches > 0) run.refute(std::to_string(s.mismatches) + " constructive/oracle mismatches");
  if (s.status() == ReproStatus::BudgetExceeded) run.out_of_budget("cross-validate " + s.config.op);
}

CrossSummary cross(const Run& run, const char* op, std::uint64_t count, int n_min, int n_max, int oracle_max_n) {
  CrossConfig c;
  c.op = op;
  c.instances = count;
  c.seed = run.config().seed;
  c.n_min = n_min;
  c.n_max = n_max;
  c.oracle_max_n = oracle_max_n;
  c.run = run.sub();
  return cross_validate(c);
}

// ---- individual claims ----------------------------------------------------

void claim_n3(Run& run) {
  EnumerationTask t;
  t.n = 3;
  int count = 0;
  for_each_digraph(t, [&](const DiGraph& d) {
    if (d.arc_count() < 4) return true;
    ++count;
    try {
      three_vertex_pair(d);
    } catch (const Error& e) {
      run.refute(std::string("three-vertex split failed: ") + e.what() + "\n" + emit_text(d));
    }
    if (!oracle_good_pair(d).found()) run.refute("oracle found no pair\n" + emit_text(d));
    return true;
  });
  run.stat("digraphs=" + std::to_string(count));
}

void claim_small4(Run& run) {
  const LabeledDigraph e4 = family("E4");
  const auto e4_form = canonical_form(e4.graph);
  EnumerationTask t;
  t.n = 4;
  t.filters.delta0_min = 1;
  int count = 0;
  int e4_copies = 0;
  int constructive = 0;
  for_each_digraph(t, [&](const DiGraph& d) {
    if (d.arc_count() < 6) return true;
    ++count;
    const bool is_e4 = canonical_form(d) == e4_form;
    e4_copies += is_e4;
    const Certificate c = small_good_pair(d);
    if (c.found() == is_e4) run.refute(std::string(is_e4 ? "E4 copy with a pair\n" : "no pair found\n") + emit_text(d));
    if (c.found() && c.route.find("oracle") == std::string::npos) ++constructive;
    if (oracle_good_pair(d).found() == is_e4) run.refute("oracle disagrees\n" + emit_text(d));
    return true;
  });
  run.stat("digraphs=" + std::to_string(count) + " e4_copies=" + std::to_string(e4_copies) +
           " constructive=" + std::to_string(constructive));
  expect_no_pair(run, e4, std::nullopt, std::nullopt, "E4");
  const LabeledDigraph f4 = family("F4");
  const Certificate c = small_good_pair(f4.graph);
  run.cert(transcript(c, &f4));
  if (!c.found()) run.refute("F4 without a pair");
}

void claim_nonexception(Run& run) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
  }
  int digraphs = 0;
  int cases = 0;
  int exceptions = 0;
  int four_exceptions = 0;
  for (int code = 0; code < 729; ++code) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int i = 0, c = code; i < 6; ++i, c /= 3) {
      const auto [u, v] = pairs[i];
      if (c % 3 != 1) arcs.emplace_back(u, v);
      if (c % 3 != 0) arcs.emplace_back(v, u);
    }
    const DiGraph d = DiGraph::build(4, arcs);
    ++digraphs;
    for (Vertex r : in_generators(d)) {
      ++cases;
      const Certificate c = semicomplete_good_r_pair(d, r);
      const bool oracle = oracle_good_pair(d, r).found();
      exceptions += c.kind == CertificateKind::Exception;
      if (is_4_exception(d, r)) {
        ++four_exceptions;
        if (oracle) run.refute("4-exception with a good r-pair\n" + emit_text(d));
      }
      if (c.found() != oracle) run.refute("solver and oracle disagree at r=" + std::to_string(r) + "\n" + emit_text(d));
      if (c.found() && (!validate_good_pair(d, *c.pair) || c.pair->in.root() != r)) {
        run.refute("invalid r-pair\n" + emit_text(d));
      }
    }
  }
  run.stat("order4 digraphs=" + std::to_string(digraphs) + " cases=" + std::to_string(cases) +
           " exceptions=" + std::to_string(exceptions) + " four_exceptions=" + std::to_string(four_exceptions));
  const LabeledDigraph st4 = family("ST4");
  for (const char* r : {"a", "b", "c", "d"}) {
    const Certificate c = semicomplete_good_r_pair(st4.graph, st4.vertex(r));
    run.cert(transcript(c, &st4));
    const bool want_pair = std::string_view(r) != "a";
    if (c.found() != want_pair) run.refute(std::string("ST4 at ") + r + " gives the wrong verdict");
  }
  fold_cross(run, cross(run, "semicomplete_good_r_pair", 1000, 4, 8, 8));
}

void claim_w(Run& run) {
  check_family(run, "W");
  const LabeledDigraph w = family("W");
  expect_no_pair(run, w, w.vertex("c1"), w.vertex("c2"), "W in=c1 out=c2");
  const SolveReport rep = alpha2_good_pair(w.graph, run.oracle());
  run.cert(report_text(rep, &w));
  if (!rep.pair || !rep.validated) run.refute("alpha2 pipeline produced no validated pair for W");
}

void claim_h4(Run& run) {
  check_family(run, "H4");
  const LabeledDigraph h4 = family("H4");
  run.stat("order=" + std::to_string(h4.graph.order()) + " arcs=" + std::to_string(h4.graph.arc_count()));
  if (h4.graph.order() != 10 || h4.graph.arc_count() != 20) run.refute("H4 has the wrong size");
  expect_no_pair(run, h4, std::nullopt, std::nullopt, "H4 any roots");
}

void claim_small(Run& run) {
  for (int n = 3; n <= 5; ++n) {
    EnumerationTask t;
    t.n = n;
    t.filters.delta0_min = 2;
    t.jobs = run.config().jobs;
    t.budget.seconds = run.sub().budget_secs;
    fold_enumeration(run, run_enumeration(t, EnumPredicate::HasGoodPair));
  }
}

void claim_n6(Run& run) {
  EnumerationTask t;
  t.n = 6;
  t.filters.lambda_min = 2;
  t.jobs = run.config().jobs;
  t.mode = EnumMode::Canonical;
  t.budget.seconds = run.sub().budget_secs;
  fold_enumeration(run, run_enumeration(t, EnumPredicate::HasGoodPair));
  t.mode = EnumMode::Sampled;
  t.sample_count = 1000000;
  t.seed = run.config().seed;
  t.budget.seconds = run.sub().budget_secs;
  t.budget.instances = run.config().budget_instances;
  fold_enumeration(run, run_enumeration(t, EnumPredicate::HasGoodPair));
}

void claim_mainx(Run& run) {
  fold_cross(run, cross(run, "alpha2_good_pair", 1000, 7, 12, 10));
}

void claim_cobipartite(Run& run) {
  fold_cross(run, cross(run, "cobipartite_good_pair", 500, 4, 10, 10));
}

void claim_infalpha3(Run& run) {
  for (int n = 9; n <= 12; ++n) check_family(run, "WPrimeN:" + std::to_string(n));
}

void claim_nopair_b(Run& run) {
  check_family(run, "WS");
  run.stat("no_pair_claim=not-oracle-verified order=" + std::to_string(family("WS").graph.order()));
}

void claim_nobranch(Run& run) {
  check_family(run, "NoBranchU:2");
  run.stat("no_pair_claim=not-oracle-verified order=" + std::to_string(family("NoBranchU:2").graph.order()));
}

void claim_strongnotenough(Run& run) {
  check_family(run, "StrongNotEnough:1");
  check_family(run, "StrongNotEnough:2");
  const LabeledDigraph d = family("StrongNotEnough:1");
  expect_no_pair(run, d, std::nullopt, std::nullopt, "StrongNotEnough k=1");
}

void claim_badmulti(Run& run) {
  check_family(run, "BadMulti");
  const LabeledDigraph d = family("BadMulti");
  expect_no_pair(run, d, d.vertex("s"), d.vertex("s"), "BadMulti in=s out=s");
}

void claim_figures(Run& run) {
  int drawn = 0;
  for (const FigurePattern& f : all_figures()) {
    if (!f.has_pair()) continue;
    ++drawn;
    const LabeledDigraph d = f.digraph();
    if (Validation v = validate_good_pair(d.graph, f.pair()); !v) run.refute(f.name + ": " + v.reason);
  }
  run.stat("drawn_pairs=" + std::to_string(drawn));
}

void claim_family_sanity(Run& run) {
  for (const std::string& name : family_names()) check_family(run, name);
  check_family(run, "WPrimeN:10");
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  struct Row {
    const char* id;
    const char* statement;
    void (*body)(Run&);
  };
  static const std::vector<Claim> claims = [] {
    const Row table[] = {
        {"prop-n3", "every digraph on 3 vertices with at least 4 arcs has a good pair", claim_n3},
        {"prop-small4-E4", "a digraph of order 4 with at least 6 arcs and min semidegree >= 1 has a good pair iff it is not E4", claim_small4},
        {"thm-nonexception", "a semicomplete digraph of order >= 4 has a good r-pair for r in In(D) unless (D, r) is an exception", claim_nonexception},
        {"prop-W", "W is 2-arc-strong with alpha 2, has a good pair, but no arc-disjoint B+_c2, B-_c1", claim_w},
        {"prop-H4", "H4 (10 vertices, 20 arcs) has lambda 2, alpha 4 and no good pair", claim_h4},
        {"prop-small", "every digraph of order at most 5 with min semidegree >= 2 has a good pair", claim_small},
        {"prop-n6OK", "every digraph on 6 vertices with arc-connectivity >= 2 has a good pair", claim_n6},
        {"thm-mainX", "every digraph with alpha <= 2 <= lambda has a good pair", claim_mainx},
        {"thm-cobipartite", "every 2-arc-strong co-bipartite digraph has a good pair", claim_cobipartite},
        {"prop-infalpha3", "W'_n is 2-arc-strong with alpha 3 for every n >= 9", claim_infalpha3},
        {"thm-nopairB", "W_S (default S) is 2-arc-strong with alpha 7", claim_nopair_b},
        {"prop-noBranch", "U built from W has arc-connectivity R = 2", claim_nobranch},
        {"prop-strongnotenough", "strong co-bipartite digraphs with min semidegree >= k and no good pair exist for every k", claim_strongnotenough},
        {"fig-badmulti", "the 2-arc-strong multidigraph with alpha 2 has no arc-disjoint B+_s, B-_s", claim_badmulti},
        {"fig-pairs", "every drawn good pair is a valid good pair of its digraph", claim_figures},
        {"family-sanity", "every generated family matches its stated lambda, alpha and shape", claim_family_sanity},
    };
    std::vector<Claim> out;
    for (const Row& row : table) {
      out.push_back(Claim{row.id, row.statement, [row](const HarnessConfig& config) {
                            Run run(row.id, row.statement, config);
                            row.body(run);
                            return run.finish();
                          }});
    }
    return out;
  }();
  return claims;
}

const Claim& find_claim(std::string_view id) {
  for (const Claim& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::UnknownClaim, "no claim '" + std::string(id) + "'");
}

ReproReport verify_claim(std::string_view id, const HarnessConfig& config) {
  const Claim& c = find_claim(id);
  try {
    return c.run(config);
  } catch (const BudgetExceeded& e) {
    ReproReport r;
    r.claim = c.id;
    r.status = ReproStatus::BudgetExceeded;
    r.stats.push_back(std::string("budget_exceeded=") + e.what());
    return r;
  }
}

}  // namespace branchpair
