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

#include "branchpair/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <ostream>

#include "branchpair/analysis.hpp"
#include "branchpair/io.hpp"
#include "branchpair/random.hpp"
#include "workers.hpp"

namespace branchpair {

namespace {

constexpr std::size_t kKeptCounterexamples = 8;
constexpr std::uint64_t kChunk = 1024;

using Clock = std::chrono::steady_clock;

int popcount(std::uint64_t x) { return std::popcount(x); }

}  // namespace

bool EnumFilters::accepts(const DiGraph& d) const {
  if (delta0_min > 0 && min_semidegree(d) < delta0_min) return false;
  if (lambda_min > 0 && !is_k_arc_strong(d, lambda_min)) return false;
  if (alpha_max && !independence_at_most(d, *alpha_max)) return false;
  if (alpha_eq) {
    if (!independence_at_most(d, *alpha_eq)) return false;
    if (*alpha_eq > 0 && independence_at_most(d, *alpha_eq - 1)) return false;
  }
  return true;
}

std::string_view to_string(EnumMode mode) {
  switch (mode) {
    case EnumMode::Exhaustive: return "exhaustive";
    case EnumMode::Canonical: return "canonical";
    case EnumMode::Sampled: return "sampled";
  }
  return "unknown";
}

std::string_view to_string(EnumPredicate predicate) {
  return predicate == EnumPredicate::HasGoodPair ? "has_good_pair" : "has_good_pair_all_roots_s";
}

std::optional<Clock::time_point> RunBudget::deadline_from(Clock::time_point start) const {
  if (!seconds) return std::nullopt;
  return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
}

void check_task(const EnumerationTask& task) {
  const int limit = task.mode == EnumMode::Exhaustive ? 5 : task.mode == EnumMode::Canonical ? 6 : 16;
  if (task.n < 1 || task.n > limit) {
    throw Error(ErrorCode::InvalidParameters, std::string(to_string(task.mode)) + " mode admits 1.." +
                                                  std::to_string(limit) + " vertices, got " + std::to_string(task.n));
  }
  if (task.jobs < 1) throw Error(ErrorCode::InvalidParameters, "jobs must be positive");
  if (task.mode == EnumMode::Sampled && (task.density <= 0 || task.density > 1)) {
    throw Error(ErrorCode::InvalidParameters, "density must lie in (0, 1]");
  }
}

namespace {

std::uint64_t row_key(std::uint64_t row, int n) {
  // Column 0 is the most significant position.
  std::uint64_t key = 0;
  for (int j = 0; j < n; ++j) key |= ((row >> j) & 1u) << (n - 1 - j);
  return key;
}

std::vector<std::vector<Vertex>> all_permutations(int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Vertex>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t permuted_row(const std::vector<std::uint64_t>& rows, const std::vector<Vertex>& p, int i) {
  std::uint64_t r = 0;
  const std::uint64_t src = rows[p[i]];
  for (std::size_t j = 0; j < p.size(); ++j) r |= ((src >> p[j]) & 1u) << j;
  return r;
}

// Whether no degree-preserving relabelling gives a smaller matrix; rows
// already carry non-increasing out-degrees.
class CanonicalCheck {
 public:
  explicit CanonicalCheck(int n) : n_(n), perms_(all_permutations(n)) {}

  bool minimal(const std::vector<std::uint64_t>& rows) const {
    std::vector<int> deg(n_);
    for (int i = 0; i < n_; ++i) deg[i] = popcount(rows[i]);
    for (const auto& p : perms_) {
      bool keeps = true;
      for (int i = 0; i < n_ && keeps; ++i) keeps = deg[p[i]] == deg[i];
      if (!keeps) continue;
      for (int i = 0; i < n_; ++i) {
        const std::uint64_t a = row_key(permuted_row(rows, p, i), n_);
        const std::uint64_t b = row_key(rows[i], n_);
        if (a < b) return false;
        if (a > b) break;
      }
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<Vertex>> perms_;
};

std::vector<std::uint64_t> rows_of(const DiGraph& d) {
  std::vector<std::uint64_t> rows(d.order());
  for (Vertex v = 0; v < d.order(); ++v) rows[v] = d.out_neighbors(v).bits();
  return rows;
}

// Row-by-row generator; shard selects row-0 candidates by index.
class Walker {
 public:
  Walker(const EnumerationTask& task, int shard, int shards, const std::function<bool(const DiGraph&)>& visit,
         std::uint64_t* generated)
      : task_(task),
        n_(task.n),
        bound_(std::max(task.filters.delta0_min, task.filters.lambda_min)),
        canonical_(task.mode == EnumMode::Canonical),
        shard_(shard),
        shards_(shards),
        visit_(visit),
        generated_(generated),
        rows_(task.n, 0),
        indeg_(task.n, 0) {
    if (canonical_) check_.emplace(n_);
    for (int i = 0; i < n_; ++i) {
      std::vector<std::uint64_t> cand;
      const std::uint64_t others = ((std::uint64_t{1} << n_) - 1) & ~(std::uint64_t{1} << i);
      // Submasks of `others`, descending out-degree first for canonical order.
      for (std::uint64_t m = others;; m = (m - 1) & others) {
        if (popcount(m) >= bound_) cand.push_back(m);
        if (m == 0) break;
      }
      std::stable_sort(cand.begin(), cand.end(), [](auto a, auto b) { return popcount(a) > popcount(b); });
      candidates_.push_back(std::move(cand));
    }
  }

  void run() { row(0); }

 private:
  bool row(int i) {
    if (i == n_) return leaf();
    const auto& cand = candidates_[i];
    for (std::size_t c = 0; c < cand.size(); ++c) {
      const std::uint64_t m = cand[c];
      if (i == 0 && static_cast<int>(c % shards_) != shard_) continue;
      if (canonical_ && i > 0 && popcount(m) > popcount(rows_[i - 1])) continue;
      rows_[i] = m;
      for (int v = 0; v < n_; ++v) indeg_[v] += (m >> v) & 1u;
      bool feasible = true;
      for (int v = 0; v < n_ && feasible; ++v) {
        const int rest = n_ - 1 - i - (v > i ? 1 : 0);
        feasible = indeg_[v] + rest >= bound_;
      }
      const bool go_on = !feasible || row(i + 1);
      for (int v = 0; v < n_; ++v) indeg_[v] -= (m >> v) & 1u;
      if (!go_on) return false;
    }
    return true;
  }

  bool leaf() {
    ++*generated_;
    if (canonical_ && !check_->minimal(rows_)) return true;
    const DiGraph d = DiGraph::from_out_masks(rows_);
    if (!task_.filters.accepts(d)) return true;
    return visit_(d);
  }

  const EnumerationTask& task_;
  int n_;
  int bound_;
  bool canonical_;
  int shard_;
  int shards_;
  const std::function<bool(const DiGraph&)>& visit_;
  std::uint64_t* generated_;
  std::vector<std::vector<std::uint64_t>> candidates_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> indeg_;
  std::optional<CanonicalCheck> check_;
};

}  // namespace

void for_each_digraph(const EnumerationTask& task, const std::function<bool(const DiGraph&)>& visit) {
  check_task(task);
  if (task.mode == EnumMode::Sampled) throw Error(ErrorCode::InvalidParameters, "sampled mode has no stream");
  std::uint64_t generated = 0;
  Walker(task, 0, 1, visit, &generated).run();
}

std::vector<std::uint64_t> canonical_form(const DiGraph& d) {
  const int n = d.order();
  if (n > 8) throw Error(ErrorCode::TooLarge, "canonical form is limited to 8 vertices");
  const std::vector<std::uint64_t> rows = rows_of(d);
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  // Vertices ordered by (out-degree descending, id); permutations follow it.
  auto before = [&](Vertex a, Vertex b) {
    const int da = popcount(rows[a]);
    const int db = popcount(rows[b]);
    return da != db ? da > db : a < b;
  };
  std::sort(p.begin(), p.end(), before);
  std::optional<std::vector<std::uint64_t>> best;
  std::vector<std::uint64_t> keys(n);
  std::vector<std::uint64_t> best_keys;
  do {
    bool sorted = true;
    for (int i = 1; i < n && sorted; ++i) sorted = popcount(rows[p[i - 1]]) >= popcount(rows[p[i]]);
    if (!sorted) continue;
    std::vector<std::uint64_t> cand(n);
    for (int i = 0; i < n; ++i) {
      cand[i] = permuted_row(rows, p, i);
      keys[i] = row_key(cand[i], n);
    }
    if (!best || keys < best_keys) {
      best = cand;
      best_keys = keys;
    }
  } while (std::next_permutation(p.begin(), p.end(), before));
  return *best;
}

bool is_canonical(const DiGraph& d) { return canonical_form(d) == rows_of(d); }

bool holds(const DiGraph& d, EnumPredicate predicate, const OracleBudget& budget, std::uint64_t* nodes) {
  auto tally = [&](const Certificate& c) {
    if (nodes) *nodes += c.stats.nodes;
    return c.found();
  };
  if (predicate == EnumPredicate::HasGoodPair) return tally(oracle_good_pair(d, std::nullopt, std::nullopt, budget));
  for (Vertex s = 0; s < d.order(); ++s) {
    if (!tally(oracle_good_pair(d, s, s, budget))) return false;
  }
  return true;
}

namespace {

struct Partial {
  std::uint64_t generated = 0;
  std::uint64_t qualifying = 0;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t nodes = 0;
  std::vector<DiGraph> counterexamples;
};

// Shared stop conditions of one run.
class RunControl {
 public:
  RunControl(const EnumerationTask& task, Clock::time_point start)
      : deadline_(task.budget.deadline_from(start)), cap_(task.budget.instances), stop_on_failure_(task.stop_on_failure) {}

  // Reserves one check; false once the run must end.
  bool admit() {
    if (stopped_.load()) return false;
    if (deadline_ && Clock::now() >= *deadline_) return halt(true);
    if (cap_ && admitted_.fetch_add(1) >= *cap_) return halt(true);
    return true;
  }
  void failure() {
    if (stop_on_failure_) halt(false);
  }
  bool stopped() const { return stopped_.load(); }
  bool exceeded() const { return exceeded_.load(); }
  OracleBudget oracle_budget() const {
    OracleBudget b;
    b.max_vertices = 16;
    b.deadline = deadline_;
    return b;
  }

 private:
  bool halt(bool budget) {
    if (budget) exceeded_ = true;
    stopped_ = true;
    return false;
  }

  std::optional<Clock::time_point> deadline_;
  std::optional<std::uint64_t> cap_;
  bool stop_on_failure_;
  std::atomic<std::uint64_t> admitted_{0};
  std::atomic<bool> stopped_{false};
  std::atomic<bool> exceeded_{false};
};

// Oracle check of one qualifying digraph; false when the run must end.
bool check_one(const DiGraph& d, EnumPredicate predicate, RunControl& ctl, Partial& part) {
  ++part.qualifying;
  if (!ctl.admit()) return false;
  try {
    const bool ok = holds(d, predicate, ctl.oracle_budget(), &part.nodes);
    ++part.checked;
    if (!ok) {
      ++part.failures;
      if (part.counterexamples.size() < kKeptCounterexamples) part.counterexamples.push_back(d);
      ctl.failure();
    }
  } catch (const BudgetExceeded&) {
    return false;
  }
  return !ctl.stopped();
}

}  // namespace

EnumSummary run_enumeration(const EnumerationTask& task, EnumPredicate predicate) {
  check_task(task);
  const Clock::time_point start = Clock::now();
  RunControl ctl(task, start);
  std::vector<Partial> parts;

  if (task.mode == EnumMode::Sampled) {
    const std::size_t chunks = (task.sample_count + kChunk - 1) / kChunk;
    parts.resize(chunks);
    detail::run_workers(task.jobs, chunks, [&](std::size_t c) {
      Partial& part = parts[c];
      Rng rng = make_rng(task.seed, c);
      const std::uint64_t target = std::min<std::uint64_t>(kChunk, task.sample_count - c * kChunk);
      while (part.checked < target && !ctl.stopped()) {
        const DiGraph d = random_digraph(task.n, task.density, rng);
        ++part.generated;
        if (!task.filters.accepts(d)) continue;
        if (!check_one(d, predicate, ctl, part)) break;
      }
    });
  } else {
    // Shards interleave row-0 candidates; enough of them to keep workers busy.
    const int shards = task.jobs == 1 ? 1 : 4 * task.jobs;
    parts.resize(shards);
    detail::run_workers(task.jobs, shards, [&](std::size_t s) {
      Partial& part = parts[s];
      std::function<bool(const DiGraph&)> visit = [&](const DiGraph& d) { return check_one(d, predicate, ctl, part); };
      Walker(task, static_cast<int>(s), shards, visit, &part.generated).run();
    });
  }

  EnumSummary sum;
  sum.task = task;
  sum.predicate = predicate;
  for (const Partial& p : parts) {
    sum.generated += p.generated;
    sum.qualifying += p.qualifying;
    sum.checked += p.checked;
    sum.failures += p.failures;
    sum.oracle_nodes += p.nodes;
    for (const DiGraph& d : p.counterexamples) {
      if (sum.counterexamples.size() < kKeptCounterexamples) sum.counterexamples.push_back(d);
    }
  }
  sum.budget_exceeded = ctl.exceeded();
  sum.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return sum;
}

void write_summary(std::ostream& out, const EnumSummary& s) {
  const EnumerationTask& t = s.task;
  out << "STAT task n=" << t.n << " mode=" << to_string(t.mode) << " predicate=" << to_string(s.predicate)
      << " lambda>=" << t.filters.lambda_min << " delta0>=" << t.filters.delta0_min;
  if (t.filters.alpha_max) out << " alpha<=" << *t.filters.alpha_max;
  if (t.filters.alpha_eq) out << " alpha=" << *t.filters.alpha_eq;
  if (t.mode == EnumMode::Sampled) out << " samples=" << t.sample_count << " seed=" << t.seed << " density=" << t.density;
  out << " jobs=" << t.jobs << '\n';
  out << "STAT generated=" << s.generated << " qualifying=" << s.qualifying << " checked=" << s.checked
      << " failures=" << s.failures << " oracle_nodes=" << s.oracle_nodes << " seconds=" << s.seconds << '\n';
  for (const DiGraph& d : s.counterexamples) {
    out << "CERT counterexample\n" << emit_text(d);
  }
  out << "STATUS "
      << (s.failures > 0 ? "refuted" : s.budget_exceeded ? "budget-exceeded" : "confirmed") << '\n';
}

}  // namespace branchpair
