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
#include <optional>
#include <vector>

#include "branchpair/branching.hpp"
#include "branchpair/certificate.hpp"
#include "branchpair/digraph.hpp"

namespace branchpair {

struct OracleBudget {
  int max_vertices = 14;
  std::uint64_t max_nodes = 0;  // 0: no node cap
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static OracleBudget within(std::chrono::duration<double> wall, int max_vertices = 14) {
    OracleBudget b;
    b.max_vertices = max_vertices;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(wall);
    return b;
  }
};

/// Thrown when the oracle gives up; never a silent "no pair".
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& message, OracleStats stats)
      : Error(ErrorCode::BudgetExceeded, message), stats_(stats) {}
  const OracleStats& stats() const noexcept { return stats_; }

 private:
  OracleStats stats_;
};

/// Streams every spanning out-branching rooted at `root` exactly once, in a
/// fixed order, until `visit` returns false. Throws Error{RootCannotReachAll}
/// and Error{TooLarge} for n > 16.
void for_each_out_branching(const DiGraph& d, Vertex root, const std::function<bool(const Branching&)>& visit);
std::vector<Branching> enumerate_out_branchings(const DiGraph& d, Vertex root);

/// Decides whether d has a good pair whose in-root lies in `in_roots` and
/// whose out-root lies in `out_roots`. Enumerates branchings on the cheaper
/// side and tests the other side on the residual digraph.
/// Returns PairFound or ExhaustedSearch; throws BudgetExceeded.
Certificate oracle_good_pair_among(const DiGraph& d, VertexSet in_roots, VertexSet out_roots,
                                   const OracleBudget& budget = {});

/// As above with single optional roots (absent: any root).
Certificate oracle_good_pair(const DiGraph& d, std::optional<Vertex> root_in = std::nullopt,
                             std::optional<Vertex> root_out = std::nullopt, const OracleBudget& budget = {});

/// (y, z) when N^-(r) = {y} and d^-(y) = 1. Throws Error{NotSemicomplete}.
std::optional<ExceptionWitness> is_exception(const DiGraph& d, Vertex r);

/// Whether d, on 4 vertices, is the strong tournament a>b>c>d>a, a>c, d>b
/// with possibly dc and cb added, where a is the given vertex.
bool is_4_exception(const DiGraph& d, Vertex a);

}  // namespace branchpair
