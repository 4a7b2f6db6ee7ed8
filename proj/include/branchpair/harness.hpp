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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branchpair/digraph.hpp"
#include "branchpair/enumerate.hpp"

namespace branchpair {

enum class ReproStatus { Confirmed, Refuted, BudgetExceeded };
std::string_view to_string(ReproStatus s);

/// Process exit code: 0 confirmed, 2 refuted, 3 budget exceeded.
int exit_code(ReproStatus s);
ReproStatus worst(ReproStatus a, ReproStatus b);

struct ReproReport {
  std::string claim;
  std::string statement;
  ReproStatus status = ReproStatus::Confirmed;
  std::vector<std::string> stats;         // "key=value ..." lines
  std::vector<std::string> certificates;  // transcripts, CERT-prefixed
  double seconds = 0;
};

void write_report(std::ostream& out, const ReproReport& r);

struct HarnessConfig {
  std::optional<double> budget_secs;  // per claim or run
  std::optional<std::uint64_t> budget_instances;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool exhaustive = false;  // opt-in long runs
};

/// Reads BRANCHPAIR_BUDGET_SECS when set. Throws Error{InvalidParameters}.
std::optional<double> budget_from_env();

// ---- cross-validation ------------------------------------------------------

struct CrossConfig {
  std::string op;
  std::uint64_t instances = 100;
  std::uint64_t seed = 1;
  int n_min = 4;
  int n_max = 8;
  int oracle_max_n = 10;  // oracle cross-check up to this order
  HarnessConfig run;
};

struct CrossSummary {
  CrossConfig config;
  std::uint64_t instances = 0;
  std::uint64_t cases = 0;  // instances times roots, where roots vary
  std::uint64_t constructive_pairs = 0;
  std::uint64_t refusals = 0;  // exception certificates or no pair
  std::uint64_t oracle_checked = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t sampling_failures = 0;
  std::map<std::string, std::uint64_t> routes;
  std::vector<std::string> dumps;  // mismatch transcripts
  bool budget_exceeded = false;
  double seconds = 0;

  ReproStatus status() const;
};

std::vector<std::string> cross_validate_ops();
/// Throws Error{InvalidParameters} for unknown ops or ranges.
CrossSummary cross_validate(const CrossConfig& config);
void write_summary(std::ostream& out, const CrossSummary& s);

// ---- conjecture search ----------------------------------------------------

enum class Conjecture { SameRootAlpha2, PrescribedRoots3Arc };
std::string_view to_string(Conjecture c);
Conjecture parse_conjecture(std::string_view text);

struct ConjectureCheck {
  bool hypothesis = false;  // simple, alpha <= 2 and lambda >= 2 (resp. 3)
  int lambda = 0;
  int alpha = 0;
  /// (out-root s, in-root t) without arc-disjoint B+_s, B-_t.
  std::vector<std::pair<Vertex, Vertex>> failures;
  std::uint64_t oracle_calls = 0;
};

ConjectureCheck check_conjecture(const DiGraph& d, Conjecture c, const OracleBudget& budget = {});

struct ConjectureConfig {
  Conjecture conjecture = Conjecture::SameRootAlpha2;
  std::uint64_t instances = 100;
  int n_min = 4;
  int n_max = 9;
  HarnessConfig run;
};

struct ConjectureSummary {
  ConjectureConfig config;
  std::uint64_t instances = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t sampling_failures = 0;
  std::vector<std::string> counterexamples;
  bool budget_exceeded = false;
  double seconds = 0;

  ReproStatus status() const;
};

ConjectureSummary conjecture_search(const ConjectureConfig& config);
void write_summary(std::ostream& out, const ConjectureSummary& s);

// ---- properties ------------------------------------------------------------

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

std::vector<std::string> property_names();
/// Runs one property on `cases` seeded random instances.
/// Throws Error{InvalidParameters} for unknown names.
PropertyResult check_property(std::string_view name, std::uint64_t cases, std::uint64_t seed);

// ---- reproduced claims ---------------------------------------------------

struct Claim {
  std::string id;
  std::string statement;
  std::function<ReproReport(const HarnessConfig&)> run;
};

const std::vector<Claim>& claim_registry();
/// Throws Error{UnknownClaim}.
const Claim& find_claim(std::string_view id);
ReproReport verify_claim(std::string_view id, const HarnessConfig& config);

/// A vertex set X with fewest arcs leaving it (exhaustive, n <= 20), as a
/// witness for arc-connectivity.
std::pair<VertexSet, int> min_out_cut(const DiGraph& d);

}  // namespace branchpair
