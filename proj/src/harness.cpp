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

#include "branchpair/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

#include "branchpair/analysis.hpp"
#include "branchpair/io.hpp"
#include "branchpair/oracle.hpp"
#include "branchpair/random.hpp"
#include "branchpair/solvers.hpp"
#include "workers.hpp"

namespace branchpair {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kKeptDumps = 4;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::optional<Clock::time_point> deadline_of(const HarnessConfig& c, Clock::time_point start) {
  return RunBudget{c.budget_secs, c.budget_instances}.deadline_from(start);
}

OracleBudget oracle_budget(std::optional<Clock::time_point> deadline) {
  OracleBudget b;
  b.max_vertices = 16;
  b.deadline = deadline;
  return b;
}

}  // namespace

std::string_view to_string(ReproStatus s) {
  switch (s) {
    case ReproStatus::Confirmed: return "confirmed";
    case ReproStatus::Refuted: return "refuted";
    case ReproStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

int exit_code(ReproStatus s) {
  switch (s) {
    case ReproStatus::Confirmed: return 0;
    case ReproStatus::Refuted: return 2;
    case ReproStatus::BudgetExceeded: return 3;
  }
  return 1;
}

ReproStatus worst(ReproStatus a, ReproStatus b) {
  if (a == ReproStatus::Refuted || b == ReproStatus::Refuted) return ReproStatus::Refuted;
  if (a == ReproStatus::BudgetExceeded || b == ReproStatus::BudgetExceeded) return ReproStatus::BudgetExceeded;
  return ReproStatus::Confirmed;
}

void write_report(std::ostream& out, const ReproReport& r) {
  out << "CLAIM " << r.claim << ' ' << r.statement << '\n';
  for (const std::string& s : r.stats) out << "STAT " << s << '\n';
  for (const std::string& c : r.certificates) {
    out << c;
    if (!c.empty() && c.back() != '\n') out << '\n';
  }
  out << "STAT seconds=" << r.seconds << '\n';
  out << "STATUS " << to_string(r.status) << '\n';
}

std::optional<double> budget_from_env() {
  const char* v = std::getenv("BRANCHPAIR_BUDGET_SECS");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const double secs = std::strtod(v, &end);
  if (end == v || *end != '\0' || secs <= 0) {
    throw Error(ErrorCode::InvalidParameters, std::string("BRANCHPAIR_BUDGET_SECS is not a positive number: ") + v);
  }
  return secs;
}

// ---- cross-validation ------------------------------------------------------

namespace {

struct Outcome {
  std::uint64_t cases = 0;
  std::uint64_t pairs = 0;
  std::uint64_t refusals = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t mismatches = 0;
  bool sampling_failed = false;
  bool budget = false;
  std::vector<std::string> routes;
  std::vector<std::string> dumps;
};

struct OpContext {
  int n;
  Rng& rng;
  int oracle_max_n;
  OracleBudget budget;
};

std::string dump(const DiGraph& d, const std::string& what, const std::string& constructive,
                 const std::optional<Certificate>& oracle) {
  std::ostringstream out;
  out << "CERT mismatch " << what << '\n' << emit_text(d) << constructive;
  if (oracle) out << transcript(*oracle);
  return out.str();
}

// Oracle cross-check of one case: `found` is the constructive verdict.
void compare(Outcome& o, const OpContext& ctx, const DiGraph& d, bool found, std::optional<Vertex> r,
             std::optional<Vertex> q, const std::string& what, const std::string& constructive) {
  if (d.order() > ctx.oracle_max_n) return;
  const Certificate c = oracle_good_pair(d, r, q, ctx.budget);
  ++o.oracle_checked;
  if (c.found() != found) {
    ++o.mismatches;
    o.dumps.push_back(dump(d, what, constructive, c));
  }
}

void tally_pair(Outcome& o, const DiGraph& d, const std::optional<GoodPair>& p, std::optional<Vertex> in_root,
                std::optional<Vertex> out_root, const std::string& what, const std::string& constructive) {
  ++o.cases;
  if (!p) {
    ++o.refusals;
    return;
  }
  Validation v = validate_good_pair(d, *p);
  if (v && in_root && p->in.root() != *in_root) v = Validation::failure("in-root differs");
  if (v && out_root && p->out.root() != *out_root) v = Validation::failure("out-root differs");
  if (!v) {
    ++o.mismatches;
    o.dumps.push_back(dump(d, what + " invalid: " + v.reason, constructive, std::nullopt));
    return;
  }
  ++o.pairs;
}

std::string route_head(const std::string& route) {
  const auto cut = route.find_first_of("+=:");
  return cut == std::string::npos ? route : route.substr(0, cut);
}

using OpFn = void (*)(Outcome&, const OpContext&);

void op_alpha2(Outcome& o, const OpContext& ctx) {
  const auto d = sample_alpha2(ctx.n, 2, ctx.rng);
  if (!d) {
    o.sampling_failed = true;
    return;
  }
  const SolveReport rep = alpha2_good_pair(*d, ctx.budget);
  const std::string text = report_text(rep);
  tally_pair(o, *d, rep.validated ? rep.pair : std::nullopt, std::nullopt, std::nullopt, "alpha2_good_pair", text);
  o.routes.push_back("stage" + std::to_string(rep.stage) + " " + std::string(to_string(rep.strategy)) + " " +
                     route_head(rep.detail));
  compare(o, ctx, *d, rep.pair.has_value() && rep.validated, std::nullopt, std::nullopt, "alpha2_good_pair", text);
}

void op_semicomplete_r(Outcome& o, const OpContext& ctx) {
  std::uniform_real_distribution<double> unit(0.0, 0.6);
  const DiGraph d = random_semicomplete(ctx.n, ctx.rng, unit(ctx.rng));
  for (Vertex r : in_generators(d)) {
    const Certificate c = semicomplete_good_r_pair(d, r);
    const std::string text = transcript(c);
    tally_pair(o, d, c.pair, r, std::nullopt, "semicomplete_good_r_pair r=" + std::to_string(r), text);
    o.routes.push_back(c.found() ? route_head(c.route) : "exception");
    if (c.kind == CertificateKind::Exception) {
      if (!is_exception(d, r)) {
        ++o.mismatches;
        o.dumps.push_back(dump(d, "exception certificate on a non-exception", text, std::nullopt));
      }
    }
    compare(o, ctx, d, c.found(), r, std::nullopt, "semicomplete_good_r_pair r=" + std::to_string(r), text);
  }
}

void op_semicomplete(Outcome& o, const OpContext& ctx) {
  std::uniform_real_distribution<double> unit(0.0, 0.6);
  const DiGraph d = random_semicomplete(ctx.n, ctx.rng, unit(ctx.rng));
  const GoodPair p = semicomplete_good_pair(d);
  tally_pair(o, d, p, std::nullopt, std::nullopt, "semicomplete_good_pair", "");
  o.routes.push_back(is_strong(d) ? "strong" : "non-strong");
  compare(o, ctx, d, true, std::nullopt, std::nullopt, "semicomplete_good_pair", "");
}

void op_nonstrong(Outcome& o, const OpContext& ctx) {
  std::optional<DiGraph> d;
  for (int i = 0; i < 1000 && !d; ++i) {
    DiGraph g = random_semicomplete(ctx.n, ctx.rng, 0.3);
    if (!is_strong(g)) d = std::move(g);
  }
  if (!d) {
    o.sampling_failed = true;
    return;
  }
  const VertexSet outs = out_generators(*d);
  for (Vertex r : in_generators(*d)) {
    for (Vertex q : outs) {
      const GoodPair p = semicomplete_nonstrong_pair(*d, r, q);
      tally_pair(o, *d, p, r, q, "semicomplete_nonstrong_pair", "");
      o.routes.push_back(outs.size() >= 2 ? "out-cycle" : in_generators(*d).size() >= 2 ? "reversed" : "single");
      compare(o, ctx, *d, true, r, q, "semicomplete_nonstrong_pair", "");
    }
  }
}

void op_cobipartite(Outcome& o, const OpContext& ctx) {
  const auto d = sample_cobipartite(ctx.n, 2, ctx.rng);
  if (!d) {
    o.sampling_failed = true;
    return;
  }
  const SolveReport rep = cobipartite_report(*d);
  const std::string text = report_text(rep);
  tally_pair(o, *d, rep.pair, std::nullopt, std::nullopt, "cobipartite_good_pair", text);
  o.routes.push_back(std::string(to_string(rep.strategy)) + (rep.detail.empty() ? "" : " " + route_head(rep.detail)));
  compare(o, ctx, *d, rep.pair.has_value(), std::nullopt, std::nullopt, "cobipartite_good_pair", text);
}

void op_small(Outcome& o, const OpContext& ctx) {
  std::uniform_real_distribution<double> unit(0.3, 0.9);
  const DiGraph d = random_digraph(ctx.n, unit(ctx.rng), ctx.rng);
  const Certificate c = small_good_pair(d, ctx.budget);
  const std::string text = transcript(c);
  tally_pair(o, d, c.pair, std::nullopt, std::nullopt, "small_good_pair", text);
  o.routes.push_back(c.found() ? route_head(c.route) : "no pair");
  compare(o, ctx, d, c.found(), std::nullopt, std::nullopt, "small_good_pair", text);
}

void op_three(Outcome& o, const OpContext& ctx) {
  DiGraph d = random_digraph(3, 0.7, ctx.rng);
  while (d.arc_count() < 4) d = random_digraph(3, 0.7, ctx.rng);
  const GoodPair p = three_vertex_pair(d);
  tally_pair(o, d, p, std::nullopt, std::nullopt, "three_vertex_pair", "");
  o.routes.push_back(std::to_string(d.arc_count()) + " arcs");
  compare(o, ctx, d, true, std::nullopt, std::nullopt, "three_vertex_pair", "");
}

struct OpEntry {
  const char* name;
  OpFn fn;
  int min_n;
  int max_n;
};

constexpr OpEntry kOps[] = {
    {"alpha2_good_pair", op_alpha2, 2, 16},
    {"semicomplete_good_r_pair", op_semicomplete_r, 4, 16},
    {"semicomplete_good_pair", op_semicomplete, 4, 16},
    {"semicomplete_nonstrong_pair", op_nonstrong, 4, 16},
    {"cobipartite_good_pair", op_cobipartite, 2, 16},
    {"small_good_pair", op_small, 1, 6},
    {"three_vertex_pair", op_three, 3, 3},
};

const OpEntry& find_op(std::string_view name) {
  for (const OpEntry& e : kOps) {
    if (name == e.name) return e;
  }
  throw Error(ErrorCode::InvalidParameters, "unknown operation '" + std::string(name) + "'");
}

}  // namespace

ReproStatus CrossSummary::status() const {
  if (mismatches > 0) return ReproStatus::Refuted;
  if (budget_exceeded || sampling_failures > 0) return ReproStatus::BudgetExceeded;
  return ReproStatus::Confirmed;
}

std::vector<std::string> cross_validate_ops() {
  std::vector<std::string> out;
  for (const OpEntry& e : kOps) out.emplace_back(e.name);
  return out;
}

CrossSummary cross_validate(const CrossConfig& config) {
  const OpEntry& op = find_op(config.op);
  if (config.n_min > config.n_max || config.n_min < op.min_n || config.n_max > op.max_n) {
    throw Error(ErrorCode::InvalidParameters, config.op + " admits orders " + std::to_string(op.min_n) + ".." +
                                                  std::to_string(op.max_n));
  }
  if (config.run.jobs < 1) throw Error(ErrorCode::InvalidParameters, "jobs must be positive");
  const Clock::time_point start = Clock::now();
  const auto deadline = deadline_of(config.run, start);
  std::uint64_t count = config.instances;
  if (config.run.budget_instances) count = std::min(count, *config.run.budget_instances);
  std::vector<Outcome> results(count);
  std::atomic<bool> expired{false};
  detail::run_workers(config.run.jobs, count, [&](std::size_t i) {
    Outcome& o = results[i];
    if (expired.load() || (deadline && Clock::now() >= *deadline)) {
      expired = true;
      o.budget = true;
      return;
    }
    Rng rng = make_rng(config.seed, i);
    const int n = std::uniform_int_distribution<int>(config.n_min, config.n_max)(rng);
    try {
      op.fn(o, OpContext{n, rng, config.oracle_max_n, oracle_budget(deadline)});
    } catch (const BudgetExceeded&) {
      expired = true;
      o.budget = true;
    } catch (const Error& e) {
      ++o.mismatches;
      o.dumps.push_back("CERT mismatch " + config.op + " threw: " + e.what() + "\n");
    }
  });

  CrossSummary s;
  s.config = config;
  for (const Outcome& o : results) {
    if (o.budget) {
      s.budget_exceeded = true;
      continue;
    }
    if (o.sampling_failed) {
      ++s.sampling_failures;
      continue;
    }
    ++s.instances;
    s.cases += o.cases;
    s.constructive_pairs += o.pairs;
    s.refusals += o.refusals;
    s.oracle_checked += o.oracle_checked;
    s.mismatches += o.mismatches;
    for (const std::string& r : o.routes) ++s.routes[r];
    for (const std::string& d : o.dumps) {
      if (s.dumps.size() < kKeptDumps) s.dumps.push_back(d);
    }
  }
  s.budget_exceeded = s.budget_exceeded || count < config.instances;
  s.seconds = since(start);
  return s;
}

void write_summary(std::ostream& out, const CrossSummary& s) {
  const CrossConfig& c = s.config;
  out << "STAT op=" << c.op << " instances=" << c.instances << " seed=" << c.seed << " n=" << c.n_min << ".."
      << c.n_max << " oracle_max_n=" << c.oracle_max_n << " jobs=" << c.run.jobs << '\n';
  out << "STAT ran=" << s.instances << " cases=" << s.cases << " pairs=" << s.constructive_pairs
      << " refusals=" << s.refusals << " oracle_checked=" << s.oracle_checked << " mismatches=" << s.mismatches
      << " sampling_failures=" << s.sampling_failures << " seconds=" << s.seconds << '\n';
  for (const auto& [route, count] : s.routes) out << "STAT route " << route << " count=" << count << '\n';
  for (const std::string& d : s.dumps) out << d;
  out << "STATUS " << to_string(s.status()) << '\n';
}

// ---- conjecture search ----------------------------------------------------

std::string_view to_string(Conjecture c) {
  return c == Conjecture::SameRootAlpha2 ? "same-root-alpha2" : "prescribed-roots-3arc";
}

Conjecture parse_conjecture(std::string_view text) {
  if (text == "same-root-alpha2") return Conjecture::SameRootAlpha2;
  if (text == "prescribed-roots-3arc") return Conjecture::PrescribedRoots3Arc;
  throw Error(ErrorCode::InvalidParameters, "unknown conjecture '" + std::string(text) + "'");
}

ConjectureCheck check_conjecture(const DiGraph& d, Conjecture c, const OracleBudget& budget) {
  ConjectureCheck out;
  out.lambda = d.order() >= 2 ? arc_connectivity(d) : 0;
  out.alpha = independence_number(d).size;
  const int need = c == Conjecture::SameRootAlpha2 ? 2 : 3;
  out.hypothesis = !d.is_multi() && out.alpha <= 2 && out.lambda >= need;
  for (Vertex s = 0; s < d.order(); ++s) {
    for (Vertex t = 0; t < d.order(); ++t) {
      if (c == Conjecture::SameRootAlpha2 && s != t) continue;
      ++out.oracle_calls;
      if (!oracle_good_pair(d, t, s, budget).found()) out.failures.emplace_back(s, t);
    }
  }
  return out;
}

ReproStatus ConjectureSummary::status() const {
  if (!counterexamples.empty()) return ReproStatus::Refuted;
  if (budget_exceeded || sampling_failures > 0) return ReproStatus::BudgetExceeded;
  return ReproStatus::Confirmed;
}

ConjectureSummary conjecture_search(const ConjectureConfig& config) {
  if (config.n_min < 2 || config.n_min > config.n_max || config.n_max > 16) {
    throw Error(ErrorCode::InvalidParameters, "conjecture search admits orders 2..16");
  }
  const Clock::time_point start = Clock::now();
  const auto deadline = deadline_of(config.run, start);
  const int need = config.conjecture == Conjecture::SameRootAlpha2 ? 2 : 3;
  std::uint64_t count = config.instances;
  if (config.run.budget_instances) count = std::min(count, *config.run.budget_instances);
  struct One {
    bool ran = false;
    bool budget = false;
    bool sampling_failed = false;
    std::uint64_t calls = 0;
    std::string counterexample;
  };
  std::vector<One> results(count);
  std::atomic<bool> expired{false};
  detail::run_workers(config.run.jobs, count, [&](std::size_t i) {
    One& o = results[i];
    if (expired.load() || (deadline && Clock::now() >= *deadline)) {
      expired = true;
      o.budget = true;
      return;
    }
    Rng rng = make_rng(config.run.seed, i);
    const int n = std::uniform_int_distribution<int>(config.n_min, config.n_max)(rng);
    const auto d = sample_alpha2(n, need, rng, 20000);
    if (!d) {
      o.sampling_failed = true;
      return;
    }
    try {
      const ConjectureCheck c = check_conjecture(*d, config.conjecture, oracle_budget(deadline));
      o.ran = true;
      o.calls = c.oracle_calls;
      if (c.hypothesis && !c.failures.empty()) {
        std::ostringstream out;
        out << "CERT counterexample conjecture=" << to_string(config.conjecture) << " instance=" << i << '\n'
            << emit_text(*d);
        for (auto [s, t] : c.failures) out << "CERT failing out-root=" << s << " in-root=" << t << '\n';
        o.counterexample = out.str();
      }
    } catch (const BudgetExceeded&) {
      expired = true;
      o.budget = true;
    }
  });
  ConjectureSummary s;
  s.config = config;
  for (const One& o : results) {
    if (o.budget) s.budget_exceeded = true;
    if (o.sampling_failed) ++s.sampling_failures;
    if (!o.ran) continue;
    ++s.instances;
    s.oracle_calls += o.calls;
    if (!o.counterexample.empty()) s.counterexamples.push_back(o.counterexample);
  }
  s.budget_exceeded = s.budget_exceeded || count < config.instances;
  s.seconds = since(start);
  return s;
}

void write_summary(std::ostream& out, const ConjectureSummary& s) {
  const ConjectureConfig& c = s.config;
  out << "STAT conjecture=" << to_string(c.conjecture) << " instances=" << c.instances << " seed=" << c.run.seed
      << " n=" << c.n_min << ".." << c.n_max << " jobs=" << c.run.jobs << '\n';
  out << "STAT ran=" << s.instances << " oracle_calls=" << s.oracle_calls
      << " sampling_failures=" << s.sampling_failures << " counterexamples=" << s.counterexamples.size()
      << " seconds=" << s.seconds << '\n';
  for (const std::string& d : s.counterexamples) out << d;
  out << "STATUS " << to_string(s.status()) << '\n';
}

// ---- properties ------------------------------------------------------------

namespace {

// Out-branchings rooted at r by the matrix-tree theorem: determinant of the
// in-degree Laplacian without row and column r (Bareiss elimination).
long long matrix_tree_count(const DiGraph& d, Vertex r) {
  const int n = d.order();
  std::vector<std::vector<__int128>> m;
  for (Vertex i = 0; i < n; ++i) {
    if (i == r) continue;
    std::vector<__int128> row;
    for (Vertex j = 0; j < n; ++j) {
      if (j == r) continue;
      row.push_back(i == j ? d.in_degree(i) : -d.multiplicity(j, i));
    }
    m.push_back(std::move(row));
  }
  const int k = n - 1;
  if (k == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (m[p][p] == 0) {
      int s = p + 1;
      while (s < k && m[s][p] == 0) ++s;
      if (s == k) return 0;
      std::swap(m[p], m[s]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    }
    prev = m[p][p];
  }
  return static_cast<long long>(sign * m[k - 1][k - 1]);
}

std::string arc_key(const Branching& b) {
  std::ostringstream out;
  for (const Arc& a : b.arcs()) out << a.tail << '>' << a.head << ',';
  return out.str();
}

using PropertyFn = std::string (*)(Rng&);  // empty string: holds

std::string prop_branching_validity(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(2, 7)(rng);
  const DiGraph d = random_digraph(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng);
  const VertexSet roots = out_generators(d);
  if (roots.empty()) return {};
  const Vertex r = roots.first();
  const DiGraph rev = reverse(d);
  std::string bad;
  int seen = 0;
  for_each_out_branching(d, r, [&](const Branching& b) {
    if (Validation v = validate_branching(d, b); !v) bad = "out-branching invalid: " + v.reason;
    if (Validation v = validate_branching(rev, b.reversed()); !v) bad = "reversed branching invalid: " + v.reason;
    return bad.empty() && ++seen < 200;
  });
  if (!bad.empty()) return bad + "\n" + emit_text(d);
  const Certificate c = oracle_good_pair(d);
  if (c.found() && !validate_good_pair(d, *c.pair)) return "oracle pair invalid\n" + emit_text(d);
  return {};
}

std::string prop_oracle_duality(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(2, 7)(rng);
  const DiGraph d = random_digraph(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng);
  const DiGraph rev = reverse(d);
  if (oracle_good_pair(d).found() != oracle_good_pair(rev).found()) return "unrooted verdicts differ\n" + emit_text(d);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const Vertex r = pick(rng);
  const Vertex q = pick(rng);
  const Certificate a = oracle_good_pair(d, r, q);
  const Certificate b = oracle_good_pair(rev, q, r);
  if (a.found() != b.found()) return "rooted verdicts differ\n" + emit_text(d);
  if (a.found() && !validate_good_pair(rev, a.pair->reversed())) return "reversed pair invalid\n" + emit_text(d);
  return {};
}

std::string prop_enumeration_unique(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(1, 6)(rng);
  const DiGraph d = random_digraph(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng);
  const VertexSet roots = out_generators(d);
  if (roots.empty()) return {};
  const Vertex r = roots.first();
  std::set<std::string> keys;
  std::uint64_t count = 0;
  for_each_out_branching(d, r, [&](const Branching& b) {
    keys.insert(arc_key(b));
    ++count;
    return true;
  });
  if (keys.size() != count) return "duplicate branching\n" + emit_text(d);
  const long long expected = matrix_tree_count(d, r);
  if (static_cast<long long>(count) != expected) {
    return "count " + std::to_string(count) + " vs matrix-tree " + std::to_string(expected) + "\n" + emit_text(d);
  }
  return {};
}

std::string prop_moon(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(3, 9)(rng);
  DiGraph d = random_semicomplete(n, rng, std::uniform_real_distribution<double>(0.0, 0.5)(rng));
  if (!is_strong(d)) return {};
  for (Vertex v = 0; v < n; ++v) {
    for (int len = 3; len <= n; ++len) {
      const std::vector<Vertex> c = hamiltonian_cycle_through(d, v, len);
      if (static_cast<int>(c.size()) != len + 1 || c.front() != v || c.back() != v) {
        return "bad cycle through " + std::to_string(v) + "\n" + emit_text(d);
      }
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!d.has_arc(c[i], c[i + 1])) return "cycle uses a non-arc\n" + emit_text(d);
      }
    }
  }
  return {};
}

std::string prop_chen_manalastras(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(3, 12)(rng);
  const auto d = sample_alpha2(n, 1, rng, 2000);
  if (!d) return {};
  const auto p = hamiltonian_path(*d);
  if (!p) return "no Hamiltonian path\n" + emit_text(*d);
  VertexSet seen;
  for (std::size_t i = 0; i < p->size(); ++i) {
    seen.insert((*p)[i]);
    if (i > 0 && !d->has_arc((*p)[i - 1], (*p)[i])) return "path uses a non-arc\n" + emit_text(*d);
  }
  if (seen != d->vertices()) return "path is not spanning\n" + emit_text(*d);
  return {};
}

std::string prop_generators_strong(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(1, 10)(rng);
  const DiGraph d = random_semicomplete(n, rng, std::uniform_real_distribution<double>(0.0, 0.5)(rng));
  for (VertexSet s : {in_generators(d), out_generators(d)}) {
    if (s.empty()) return "empty generator set\n" + emit_text(d);
    if (!is_strong(induced(d, s).graph)) return "generator set not strong\n" + emit_text(d);
  }
  return {};
}

std::string prop_ramsey(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(9, 14)(rng);
  const DiGraph d = random_digraph(n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), rng);
  const RamseyWitness w = ramsey_witness(d);
  const InducedSubgraph sub = induced(d, w.vertices);
  const bool ok = w.kind == RamseyWitness::Kind::IndependentTriple
                      ? w.vertices.size() == 3 && sub.graph.arc_count() == 0
                      : w.vertices.size() == 4 && is_semicomplete(sub.graph);
  return ok ? std::string{} : "bad witness\n" + emit_text(d);
}

struct PropertyEntry {
  const char* name;
  PropertyFn fn;
};

constexpr PropertyEntry kProperties[] = {
    {"branching-validity", prop_branching_validity},
    {"oracle-duality", prop_oracle_duality},
    {"enumeration-uniqueness", prop_enumeration_unique},
    {"moon-pancyclic", prop_moon},
    {"chen-manalastras", prop_chen_manalastras},
    {"generators-strong", prop_generators_strong},
    {"ramsey-witness", prop_ramsey},
};

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const PropertyEntry& e : kProperties) out.emplace_back(e.name);
  return out;
}

PropertyResult check_property(std::string_view name, std::uint64_t cases, std::uint64_t seed) {
  for (const PropertyEntry& e : kProperties) {
    if (name != e.name) continue;
    PropertyResult res{e.name, 0, 0, {}};
    for (std::uint64_t i = 0; i < cases; ++i) {
      Rng rng = make_rng(seed, i);
      const std::string why = e.fn(rng);
      ++res.cases;
      if (!why.empty()) {
        if (res.failures++ == 0) res.first_failure = "case " + std::to_string(i) + ": " + why;
      }
    }
    return res;
  }
  throw Error(ErrorCode::InvalidParameters, "unknown property '" + std::string(name) + "'");
}

std::pair<VertexSet, int> min_out_cut(const DiGraph& d) {
  const int n = d.order();
  if (n < 2 || n > 20) throw Error(ErrorCode::InvalidParameters, "cut witness needs 2..20 vertices");
  std::pair<VertexSet, int> best{VertexSet{}, -1};
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
    const VertexSet x = VertexSet(bits);
    int leaving = 0;
    for (Vertex u : x) {
      for (Vertex v : d.out_neighbors(u) - x) leaving += d.multiplicity(u, v);
    }
    if (best.second < 0 || leaving < best.second) best = {x, leaving};
  }
  return best;
}

}  // namespace branchpair
