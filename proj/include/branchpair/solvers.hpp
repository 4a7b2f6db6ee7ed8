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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "branchpair/branching.hpp"
#include "branchpair/certificate.hpp"
#include "branchpair/digraph.hpp"
#include "branchpair/oracle.hpp"

namespace branchpair {

enum class Strategy {
  NonStrongSemicomplete,
  ExceptionTheorem,
  UtilExtension,
  ExtendLemma,
  SmallLookup,
  CoBipartiteCase1,
  CoBipartiteCase2,
  CoBipartiteCase3,
  Alpha2Pipeline,
  OracleFallback,
};

std::string_view to_string(Strategy s);

struct SolveReport {
  Strategy strategy = Strategy::OracleFallback;
  int stage = 0;       // alpha2 pipeline stage (1..6); 0 elsewhere
  std::string detail;  // sub-route, e.g. "claim-a seed=2-cycle"
  std::optional<GoodPair> pair;
  bool validated = false;
  OracleStats stats;   // oracle work, when the oracle was consulted
};

/// Same line format as certificates, with a STRATEGY line.
void write_report(std::ostream& out, const SolveReport& r, const LabeledDigraph* names = nullptr);
std::string report_text(const SolveReport& r, const LabeledDigraph* names = nullptr);

/// Good (r,q)-pair of a non-strong semicomplete digraph of order >= 4 with
/// r in In(d) and q in Out(d). Throws Error{PreconditionViolated}.
GoodPair semicomplete_nonstrong_pair(const DiGraph& d, Vertex r, Vertex q);

/// Grows a good r-pair of d<S> (given in d's ids, |S| >= 2) into a good
/// r-pair of the semicomplete digraph d. Throws Error{PreconditionViolated}.
GoodPair semicomplete_util_extend(const DiGraph& d, Vertex r, VertexSet s, const GoodPair& sub);

/// PairFound with a good r-pair, or Exception when N^-(r) = {y} and
/// d^-(y) = 1. Needs d semicomplete, n >= 4, r in In(d).
/// Throws Error{PreconditionViolated}.
Certificate semicomplete_good_r_pair(const DiGraph& d, Vertex r);

/// Good pair of a semicomplete digraph of order >= 4.
GoodPair semicomplete_good_pair(const DiGraph& d);

/// Extends a good pair of d - X (in d's ids) by one arc per vertex of X on
/// each side. Throws Error{PreconditionViolated} when some x in X lacks an
/// in- or out-neighbour outside X.
GoodPair extend_by_buffer(const DiGraph& d, VertexSet x, const GoodPair& sub);

/// Good pair of a 3-vertex digraph with at least 4 arcs, from a path that is
/// both an in- and an out-branching. Throws Error{PreconditionViolated}.
GoodPair three_vertex_pair(const DiGraph& d);

/// Extends a good pair of d<X> with |V - X| <= 3 to d, assuming
/// lambda(d) >= 2. Throws Error{PreconditionViolated}.
GoodPair lemma_3good(const DiGraph& d, VertexSet x, const GoodPair& sub);

/// Order <= 6: constructive routes first, then the oracle. The route is
/// recorded in Certificate::route. Throws Error{PreconditionViolated}.
Certificate small_good_pair(const DiGraph& d, const OracleBudget& budget = {});

/// Needs lambda(d) >= 2 and a co-bipartition. Throws
/// Error{PreconditionViolated}, or Error{ConstructionFailed} if no case
/// construction applies.
SolveReport cobipartite_report(const DiGraph& d);
GoodPair cobipartite_good_pair(const DiGraph& d);

/// Strategy pipeline for alpha(d) <= 2 <= lambda(d). Throws
/// Error{PreconditionViolated}; BudgetExceeded only from the last stage.
SolveReport alpha2_good_pair(const DiGraph& d, const OracleBudget& budget = {});

}  // namespace branchpair
