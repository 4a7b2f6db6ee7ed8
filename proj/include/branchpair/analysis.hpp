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

#include <functional>
#include <optional>
#include <vector>

#include "branchpair/digraph.hpp"

namespace branchpair {

/// Strong components numbered in a topological order of the condensation:
/// every arc between components goes from a lower id to a higher id.
struct SccDecomposition {
  std::vector<int> component;         // per vertex
  std::vector<VertexSet> members;     // per component
  std::vector<std::uint64_t> dag_out; // per component, bitmask of successor components
  std::vector<int> initial;           // components with no incoming arc
  std::vector<int> terminal;          // components with no outgoing arc

  int count() const { return static_cast<int>(members.size()); }
};

SccDecomposition strong_components(const DiGraph& d);
bool is_strong(const DiGraph& d);

/// Vertices reachable from v (v included).
VertexSet reachable_from(const DiGraph& d, Vertex v);
/// Vertices that can reach v (v included).
VertexSet reaching(const DiGraph& d, Vertex v);

/// Maximum number of arc-disjoint s-t paths, stopping early at `limit`.
int max_flow(const DiGraph& d, Vertex s, Vertex t, int limit = kMaxVertices * kMaxVertices);

/// lambda(D), the minimum number of arcs leaving a proper nonempty subset.
/// Throws Error{TooFewVertices} for n < 2.
int arc_connectivity(const DiGraph& d);
/// lambda(D) >= k, without computing flows past k.
bool is_k_arc_strong(const DiGraph& d, int k);

/// delta^0(D); 0 for the empty digraph.
int min_semidegree(const DiGraph& d);

struct IndependentSet {
  int size = 0;
  VertexSet witness;
};

/// Exact alpha(D). Throws Error{TooLarge} for n > 32.
IndependentSet independence_number(const DiGraph& d);
/// alpha(D) <= k, with early exit.
bool independence_at_most(const DiGraph& d, int k);

bool is_semicomplete(const DiGraph& d);
bool is_tournament(const DiGraph& d);

/// Both sides induce semicomplete digraphs. `second` may be empty when d
/// itself is semicomplete.
struct CoBipartition {
  VertexSet first;
  VertexSet second;
};

/// A partition into two semicomplete parts, or nullopt. The complement of the
/// underlying graph is 2-coloured with the lowest vertex of every complement
/// component in `first`.
std::optional<CoBipartition> co_bipartition(const DiGraph& d);
/// Moves the highest vertex of a nonempty `first` into an empty `second`.
CoBipartition normalized(CoBipartition p);

/// In(D): vertices reachable from every vertex.
VertexSet in_generators(const DiGraph& d);
/// Out(D): vertices that reach every vertex.
VertexSet out_generators(const DiGraph& d);

/// Directed Hamiltonian path honouring the optional endpoints, by
/// backtracking. Throws Error{TooLarge} for n > 16.
std::optional<std::vector<Vertex>> hamiltonian_path(const DiGraph& d, std::optional<Vertex> start = std::nullopt,
                                                     std::optional<Vertex> end = std::nullopt);

/// Calls `visit` on each Hamiltonian path (in a fixed order) until it returns
/// false. Throws Error{TooLarge} for n > 16.
void for_each_hamiltonian_path(const DiGraph& d, const std::function<bool(const std::vector<Vertex>&)>& visit);

/// Directed cycle through v with `length` vertices (default: Hamiltonian),
/// returned as v, ..., v. Requires d strong and semicomplete.
/// Throws Error{NotStrong, NotSemicomplete, NoSuchCycle}.
std::vector<Vertex> hamiltonian_cycle_through(const DiGraph& d, Vertex v, std::optional<int> length = std::nullopt);

/// Cycle search without the semicomplete precondition.
std::optional<std::vector<Vertex>> find_cycle_through(const DiGraph& d, Vertex v, int length);

struct RamseyWitness {
  enum class Kind { IndependentTriple, Clique4 };
  Kind kind;
  VertexSet vertices;
};

/// An independent 3-set if one exists, else a 4-clique. Throws
/// Error{TooSmall} for n < 9.
RamseyWitness ramsey_witness(const DiGraph& d);

}  // namespace branchpair
