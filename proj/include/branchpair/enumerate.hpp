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

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "branchpair/digraph.hpp"
#include "branchpair/oracle.hpp"

namespace branchpair {

struct EnumFilters {
  int lambda_min = 0;
  int delta0_min = 0;
  std::optional<int> alpha_max;
  std::optional<int> alpha_eq;

  bool accepts(const DiGraph& d) const;
};

enum class EnumMode { Exhaustive, Canonical, Sampled };
enum class EnumPredicate { HasGoodPair, HasGoodPairAllRootsS };

std::string_view to_string(EnumMode mode);
std::string_view to_string(EnumPredicate predicate);

struct RunBudget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> instances;  // cap on checked instances

  std::optional<std::chrono::steady_clock::time_point> deadline_from(
      std::chrono::steady_clock::time_point start) const;
};

struct EnumerationTask {
  int n = 4;
  EnumFilters filters;
  EnumMode mode = EnumMode::Exhaustive;
  std::uint64_t sample_count = 1000;  // sampled: qualifying instances to check
  std::uint64_t seed = 1;
  double density = 0.5;  // sampled: arc probability
  RunBudget budget;
  int jobs = 1;
  bool stop_on_failure = false;
};

struct EnumSummary {
  EnumerationTask task;
  EnumPredicate predicate = EnumPredicate::HasGoodPair;
  std::uint64_t generated = 0;   // raw candidates drawn or visited
  std::uint64_t qualifying = 0;  // passed the filters (and canonicity)
  std::uint64_t checked = 0;     // predicate evaluated
  std::uint64_t failures = 0;
  std::uint64_t oracle_nodes = 0;
  std::vector<DiGraph> counterexamples;  // first few, in deterministic order
  bool budget_exceeded = false;
  double seconds = 0;
};

/// Number of vertices admitted per mode: exhaustive <= 5, canonical <= 6,
/// sampled <= 16. Throws Error{InvalidParameters}.
void check_task(const EnumerationTask& task);

/// Streams the digraphs of `task` that pass its filters. Exhaustive: every
/// labelled digraph. Canonical: one representative per isomorphism class.
/// Single-threaded; stops when `visit` returns false.
void for_each_digraph(const EnumerationTask& task, const std::function<bool(const DiGraph&)>& visit);

/// Canonical form: among vertex orders with non-increasing out-degree, the
/// lexicographically smallest adjacency matrix. Rows are out-masks.
std::vector<std::uint64_t> canonical_form(const DiGraph& d);
bool is_canonical(const DiGraph& d);

/// Evaluates the predicate with the exhaustive oracle.
bool holds(const DiGraph& d, EnumPredicate predicate, const OracleBudget& budget, std::uint64_t* nodes = nullptr);

/// Runs the task over `task.jobs` workers; results merge in shard order.
EnumSummary run_enumeration(const EnumerationTask& task, EnumPredicate predicate);

void write_summary(std::ostream& out, const EnumSummary& s);

}  // namespace branchpair
