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

// Command-line front end: claim reproduction, enumeration, cross-validation,
// conjecture search, solving and inspection.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "branchpair/analysis.hpp"
#include "branchpair/enumerate.hpp"
#include "branchpair/families.hpp"
#include "branchpair/harness.hpp"
#include "branchpair/io.hpp"
#include "branchpair/oracle.hpp"
#include "branchpair/solvers.hpp"

namespace bp = branchpair;

namespace {

constexpr int kUsage = 1;

struct Common {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::optional<double> budget_secs;
  std::optional<std::uint64_t> budget_instances;
  int jobs = 1;

  bp::HarnessConfig harness(bool exhaustive = false) const {
    bp::HarnessConfig c;
    c.budget_secs = budget_secs ? budget_secs : bp::budget_from_env();
    c.budget_instances = budget_instances;
    c.seed = seed;
    c.jobs = jobs;
    c.exhaustive = exhaustive;
    return c;
  }
};

void add_common(CLI::App* app, Common& c, bool with_format) {
  if (with_format) app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "dot"}));
  app->add_option("--seed", c.seed, "Random seed");
  app->add_option("--budget-secs", c.budget_secs, "Wall-clock budget in seconds (default: $BRANCHPAIR_BUDGET_SECS)")
      ->check(CLI::PositiveNumber);
  app->add_option("--budget-instances", c.budget_instances, "Cap on checked instances");
  app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

bp::LabeledDigraph load(const std::string& input, const std::string& family) {
  if (!family.empty()) return bp::generate(bp::parse_family(family)).digraph;
  if (input.empty()) throw bp::Error(bp::ErrorCode::InvalidParameters, "give an input file or --family");
  if (input == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return bp::parse_labeled_text(text);
  }
  return bp::read_labeled_file(input);
}

std::optional<bp::OracleBudget> oracle_budget(const Common& c) {
  bp::OracleBudget b;
  b.max_vertices = 16;
  if (const auto secs = c.budget_secs ? c.budget_secs : bp::budget_from_env()) {
    b = bp::OracleBudget::within(std::chrono::duration<double>(*secs), 16);
  }
  return b;
}

// ---- verify-paper ----------------------------------------------------------

int verify_paper(const Common& common, std::vector<std::string> ids, bool exhaustive, bool list) {
  if (list) {
    for (const bp::Claim& c : bp::claim_registry()) std::cout << c.id << "  " << c.statement << '\n';
    return 0;
  }
  if (ids.empty()) {
    for (const bp::Claim& c : bp::claim_registry()) ids.push_back(c.id);
  }
  for (const std::string& id : ids) bp::find_claim(id);
  bp::ReproStatus overall = bp::ReproStatus::Confirmed;
  for (const std::string& id : ids) {
    const bp::ReproReport r = bp::verify_claim(id, common.harness(exhaustive));
    bp::write_report(std::cout, r);
    std::cout.flush();
    overall = bp::worst(overall, r.status);
  }
  return bp::exit_code(overall);
}

// ---- enumerate -------------------------------------------------------------

struct EnumArgs {
  int n = 4;
  std::string mode;
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  double density = 0.5;
  int lambda_min = 0;
  int delta0_min = 0;
  std::optional<int> alpha_max;
  std::optional<int> alpha_eq;
  std::string predicate = "has_good_pair";
  bool stop_on_failure = false;
};

int enumerate(const Common& common, const EnumArgs& a) {
  bp::EnumerationTask t;
  t.n = a.n;
  t.filters = {a.lambda_min, a.delta0_min, a.alpha_max, a.alpha_eq};
  if (!a.mode.empty()) {
    t.mode = a.mode == "exhaustive" ? bp::EnumMode::Exhaustive
             : a.mode == "canonical" ? bp::EnumMode::Canonical
                                     : bp::EnumMode::Sampled;
  } else if (a.exhaustive) {
    t.mode = bp::EnumMode::Exhaustive;
  } else {
    t.mode = a.n <= 5 ? bp::EnumMode::Exhaustive : a.n == 6 ? bp::EnumMode::Canonical : bp::EnumMode::Sampled;
  }
  if (a.exhaustive && a.n == 6) t.mode = bp::EnumMode::Canonical;
  t.sample_count = a.samples;
  t.density = a.density;
  t.seed = common.seed;
  t.budget.seconds = common.budget_secs ? common.budget_secs : bp::budget_from_env();
  t.budget.instances = common.budget_instances;
  t.jobs = common.jobs;
  t.stop_on_failure = a.stop_on_failure;
  const auto pred = a.predicate == "has_good_pair" ? bp::EnumPredicate::HasGoodPair
                                                   : bp::EnumPredicate::HasGoodPairAllRootsS;
  const bp::EnumSummary s = bp::run_enumeration(t, pred);
  bp::write_summary(std::cout, s);
  return s.failures > 0 ? 2 : s.budget_exceeded ? 3 : 0;
}

// ---- cross-validate / conjecture-search -------------------------------------

int cross_validate(const Common& common, bp::CrossConfig config) {
  config.seed = common.seed;
  config.run = common.harness();
  const bp::CrossSummary s = bp::cross_validate(config);
  bp::write_summary(std::cout, s);
  return bp::exit_code(s.status());
}

void describe_roots(std::ostream& out, const bp::LabeledDigraph& d, const bp::ConjectureCheck& c, bool same_root) {
  for (auto [s, t] : c.failures) {
    out << "CERT failing";
    if (same_root) {
      out << " root=" << d.name(s);
    } else {
      out << " out-root=" << d.name(s) << " in-root=" << d.name(t);
    }
    out << '\n';
  }
}

int conjecture(const Common& common, bp::ConjectureConfig config, const std::string& input, const std::string& family) {
  config.run = common.harness();
  if (!input.empty() || !family.empty()) {
    const bp::LabeledDigraph d = load(input, family);
    const bp::ConjectureCheck c = bp::check_conjecture(d.graph, config.conjecture, *oracle_budget(common));
    std::cout << "STAT conjecture=" << bp::to_string(config.conjecture) << " order=" << d.graph.order()
              << (d.graph.is_multi() ? " multi=yes" : "") << " lambda=" << c.lambda << " alpha=" << c.alpha
              << " hypothesis=" << (c.hypothesis ? "holds" : "fails") << " oracle_calls=" << c.oracle_calls
              << " failures=" << c.failures.size() << '\n';
    describe_roots(std::cout, d, c, config.conjecture == bp::Conjecture::SameRootAlpha2);
    const bool refuted = c.hypothesis && !c.failures.empty();
    if (!c.hypothesis && !c.failures.empty()) std::cout << "STAT note=failures-outside-hypothesis\n";
    std::cout << "STATUS " << (refuted ? "refuted" : "confirmed") << '\n';
    return refuted ? 2 : 0;
  }
  const bp::ConjectureSummary s = bp::conjecture_search(config);
  bp::write_summary(std::cout, s);
  return bp::exit_code(s.status());
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string family;
  std::string root_in;
  std::string root_out;
  std::string solver = "auto";
};

int solve(const Common& common, const SolveArgs& a) {
  const bp::LabeledDigraph d = load(a.input, a.family);
  const bp::DiGraph& g = d.graph;
  std::optional<bp::Vertex> rin;
  std::optional<bp::Vertex> rout;
  if (!a.root_in.empty()) rin = d.vertex(a.root_in);
  if (!a.root_out.empty()) rout = d.vertex(a.root_out);
  const bp::OracleBudget budget = *oracle_budget(common);

  std::string solver = a.solver;
  if (solver == "auto") {
    const bool roots = rin || rout;
    if (roots || g.is_multi() || g.order() < 2) {
      solver = "oracle";
    } else if (g.order() <= 32 && bp::independence_at_most(g, 2) && bp::is_k_arc_strong(g, 2)) {
      solver = "alpha2";
    } else if (g.order() >= 4 && bp::is_semicomplete(g)) {
      solver = "semicomplete";
    } else if (g.order() <= 6) {
      solver = "small";
    } else {
      solver = "oracle";
    }
  }

  const bool honours_roots = solver == "oracle" || (solver == "semicomplete" && !rout);
  if ((rin || rout) && !honours_roots) {
    throw bp::Error(bp::ErrorCode::PreconditionViolated, "solver '" + solver + "' does not take the requested roots");
  }

  std::ostringstream text;
  std::optional<bp::GoodPair> pair;
  if (solver == "alpha2" || solver == "cobipartite") {
    const bp::SolveReport r = solver == "alpha2" ? bp::alpha2_good_pair(g, budget) : bp::cobipartite_report(g);
    bp::write_report(text, r, &d);
    pair = r.pair;
  } else {
    bp::Certificate c;
    if (solver == "semicomplete") {
      if (rin) {
        c = bp::semicomplete_good_r_pair(g, *rin);
      } else {
        c.kind = bp::CertificateKind::PairFound;
        c.pair = bp::semicomplete_good_pair(g);
        c.route = "semicomplete corollary";
      }
    } else if (solver == "small") {
      c = bp::small_good_pair(g, budget);
    } else {
      c = bp::oracle_good_pair(g, rin, rout, budget);
    }
    bp::write_transcript(text, c, &d);
    pair = c.pair;
  }
  if (pair) {
    const bp::Validation v = bp::validate_good_pair(g, *pair);
    text << "VALIDATION " << (v ? "ok" : "failed: " + v.reason) << '\n';
    if (!v) {
      std::cout << text.str();
      return kUsage;
    }
  }
  if (common.format == "dot") {
    std::istringstream lines(text.str());
    for (std::string line; std::getline(lines, line);) std::cout << "// " << line << '\n';
    std::cout << bp::emit_dot(d, pair);
  } else {
    std::cout << text.str();
  }
  return 0;
}

// ---- family / analyze --------------------------------------------------------

int family(const Common& common, const std::string& name, bool with_sanity) {
  const bp::FamilySpec spec = bp::parse_family(name);
  const bp::FamilyInstance inst = bp::generate(spec);
  if (common.format == "dot") {
    std::cout << bp::emit_dot(inst.digraph, inst.drawn_pair);
  } else {
    std::cout << bp::emit_text(inst.digraph);
  }
  if (!with_sanity) return 0;
  const bp::SanityReport r = bp::sanity(spec);
  for (const bp::SanityCheck& c : r.checks) {
    std::cerr << "STAT family=" << r.family << ' ' << c.quantity << '=' << c.computed
              << (c.at_least ? " claimed>=" : " claimed=") << c.claimed << (c.ok() ? " ok" : " MISMATCH") << '\n';
  }
  std::cerr << "STATUS " << (r.ok() ? "confirmed" : "refuted") << '\n';
  return r.ok() ? 0 : 2;
}

std::string names(const bp::LabeledDigraph& d, bp::VertexSet s) {
  std::string out = "{";
  for (bp::Vertex v : s) out += (out.size() > 1 ? "," : "") + d.name(v);
  return out + "}";
}

int analyze(const std::string& input, const std::string& fam) {
  const bp::LabeledDigraph d = load(input, fam);
  const bp::DiGraph& g = d.graph;
  std::cout << "STAT order=" << g.order() << " arcs=" << g.total_multiplicity() << (g.is_multi() ? " multi" : "")
            << '\n';
  if (g.order() >= 2) std::cout << "STAT lambda=" << bp::arc_connectivity(g) << '\n';
  if (g.order() <= 32) {
    const bp::IndependentSet a = bp::independence_number(g);
    std::cout << "STAT alpha=" << a.size << " witness=" << names(d, a.witness) << '\n';
  }
  std::cout << "STAT delta0=" << bp::min_semidegree(g) << '\n';
  const bp::SccDecomposition scc = bp::strong_components(g);
  std::cout << "STAT sccs=" << scc.count() << " strong=" << (scc.count() == 1 ? "yes" : "no") << '\n';
  for (int c = 0; c < scc.count(); ++c) std::cout << "STAT scc " << c << ' ' << names(d, scc.members[c]) << '\n';
  std::cout << "STAT semicomplete=" << (bp::is_semicomplete(g) ? "yes" : "no")
            << " tournament=" << (bp::is_tournament(g) ? "yes" : "no")
            << " cobipartite=" << (bp::co_bipartition(g) ? "yes" : "no") << '\n';
  std::cout << "STAT in_generators=" << names(d, bp::in_generators(g))
            << " out_generators=" << names(d, bp::out_generators(g)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc-disjoint in- and out-branchings: solvers, oracle and reproduction harness"};
  app.require_subcommand(1);
  Common common;

  auto* vp = app.add_subcommand("verify-paper", "Run claim checkers");
  std::vector<std::string> claim_ids;
  bool exhaustive = false;
  bool list = false;
  vp->add_option("--claims", claim_ids, "Claim ids (default: all)")->delimiter(',');
  vp->add_flag("--exhaustive", exhaustive, "Opt-in long runs");
  vp->add_flag("--list", list, "List the claim registry");
  add_common(vp, common, false);

  auto* en = app.add_subcommand("enumerate", "Enumerate digraphs and test a predicate with the oracle");
  EnumArgs ea;
  en->add_option("--n", ea.n, "Order")->required();
  en->add_option("--mode", ea.mode, "exhaustive|canonical|sampled")
      ->check(CLI::IsMember({"exhaustive", "canonical", "sampled"}));
  en->add_flag("--exhaustive", ea.exhaustive, "Exhaustive (n <= 5) or canonical (n = 6) run");
  en->add_option("--samples", ea.samples, "Sampled mode: qualifying instances");
  en->add_option("--density", ea.density, "Sampled mode: arc probability");
  en->add_option("--lambda-min", ea.lambda_min, "Minimum arc-connectivity");
  en->add_option("--delta0-min", ea.delta0_min, "Minimum semidegree");
  en->add_option("--alpha-max", ea.alpha_max, "Maximum independence number");
  en->add_option("--alpha-eq", ea.alpha_eq, "Exact independence number");
  en->add_option("--predicate", ea.predicate, "has_good_pair|has_good_pair_all_roots_s")
      ->check(CLI::IsMember({"has_good_pair", "has_good_pair_all_roots_s"}));
  en->add_flag("--stop-on-failure", ea.stop_on_failure, "Halt at the first counterexample");
  add_common(en, common, false);

  auto* cv = app.add_subcommand("cross-validate", "Compare a constructive solver with the oracle");
  bp::CrossConfig cc;
  cv->add_option("--op", cc.op, "Operation")->required()->check(CLI::IsMember(bp::cross_validate_ops()));
  cv->add_option("--instances", cc.instances, "Random instances");
  cv->add_option("--n-min", cc.n_min, "Smallest order");
  cv->add_option("--n-max", cc.n_max, "Largest order");
  cv->add_option("--oracle-max-n", cc.oracle_max_n, "Oracle cross-check up to this order");
  add_common(cv, common, false);

  auto* cs = app.add_subcommand("conjecture-search", "Search for counterexamples to an open conjecture");
  bp::ConjectureConfig conj;
  std::string conj_name = "same-root-alpha2";
  std::string cs_input;
  std::string cs_family;
  cs->add_option("--conjecture", conj_name, "same-root-alpha2|prescribed-roots-3arc")
      ->check(CLI::IsMember({"same-root-alpha2", "prescribed-roots-3arc"}));
  cs->add_option("--instances", conj.instances, "Random instances");
  cs->add_option("--n-min", conj.n_min, "Smallest order");
  cs->add_option("--n-max", conj.n_max, "Largest order");
  cs->add_option("--input", cs_input, "Check one digraph file instead of sampling");
  cs->add_option("--family", cs_family, "Check one named family instead of sampling");
  add_common(cs, common, false);

  auto* so = app.add_subcommand("solve", "Find a good pair or certify there is none");
  SolveArgs sa;
  so->add_option("input", sa.input, "Digraph file ('-' for stdin)");
  so->add_option("--family", sa.family, "Named family instead of a file");
  so->add_option("--root-in", sa.root_in, "In-branching root (label)");
  so->add_option("--root-out", sa.root_out, "Out-branching root (label)");
  so->add_option("--solver", sa.solver, "auto|oracle|alpha2|semicomplete|cobipartite|small")
      ->check(CLI::IsMember({"auto", "oracle", "alpha2", "semicomplete", "cobipartite", "small"}));
  add_common(so, common, true);

  auto* fa = app.add_subcommand("family", "Emit a named family");
  std::string fam_name;
  bool with_sanity = false;
  fa->add_option("name", fam_name, "Family, e.g. W, H4, WPrimeN:10")->required();
  fa->add_flag("--sanity", with_sanity, "Report lambda/alpha checks on stderr");
  add_common(fa, common, true);

  auto* an = app.add_subcommand("analyze", "Print lambda, alpha, delta0 and strong components");
  std::string an_input;
  std::string an_family;
  an->add_option("input", an_input, "Digraph file ('-' for stdin)");
  an->add_option("--family", an_family, "Named family instead of a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*vp) return verify_paper(common, claim_ids, exhaustive, list);
    if (*en) return enumerate(common, ea);
    if (*cv) return cross_validate(common, cc);
    if (*cs) {
      conj.conjecture = bp::parse_conjecture(conj_name);
      return conjecture(common, conj, cs_input, cs_family);
    }
    if (*so) return solve(common, sa);
    if (*fa) return family(common, fam_name, with_sanity);
    if (*an) return analyze(an_input, an_family);
  } catch (const bp::BudgetExceeded& e) {
    std::cout << "STATUS budget-exceeded\n";
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const bp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
