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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branchpair/errors.hpp"
#include "branchpair/vertex_set.hpp"

namespace branchpair {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  int multiplicity = 1;

  /// Ordering and equality look at the endpoints only.
  friend constexpr auto operator<=>(const Arc& a, const Arc& b) {
    return std::pair(a.tail, a.head) <=> std::pair(b.tail, b.head);
  }
  friend constexpr bool operator==(const Arc& a, const Arc& b) {
    return a.tail == b.tail && a.head == b.head;
  }
};

using ArcList = std::vector<std::pair<Vertex, Vertex>>;

/// Loopless digraph on vertices 0..n-1. Arcs are kept sorted by (tail, head).
/// Parallel arcs are represented by a multiplicity and are only accepted when
/// the digraph is flagged as a multidigraph. Values are immutable: every
/// mutation returns a new digraph.
class DiGraph {
 public:
  DiGraph() = default;

  /// Throws Error{LoopArc, VertexOutOfRange, DuplicateArcInSimpleDigraph}.
  static DiGraph build(int n, std::span<const std::pair<Vertex, Vertex>> arcs, bool multi = false);
  static DiGraph build(int n, std::initializer_list<std::pair<Vertex, Vertex>> arcs, bool multi = false) {
    return build(n, std::span(arcs.begin(), arcs.size()), multi);
  }
  /// Builds from adjacency masks: out[v] is the out-neighbourhood of v.
  static DiGraph from_out_masks(std::span<const std::uint64_t> out);
  /// Arcs may come in any order; parallel pairs must already be merged into
  /// multiplicities. Same errors as build().
  static DiGraph from_arcs(int n, std::vector<Arc> arcs, bool multi);

  int order() const { return n_; }
  bool is_multi() const { return multi_; }
  VertexSet vertices() const { return VertexSet::all(n_); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Number of distinct (tail, head) pairs.
  std::size_t arc_count() const { return arcs_.size(); }
  /// Number of arcs counted with multiplicity.
  int total_multiplicity() const;

  bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }
  int multiplicity(Vertex u, Vertex v) const;

  VertexSet out_neighbors(Vertex v) const { return out_[v]; }
  VertexSet in_neighbors(Vertex v) const { return in_[v]; }
  VertexSet neighbors(Vertex v) const { return out_[v] | in_[v]; }
  std::span<const VertexSet> out_masks() const { return out_; }
  std::span<const VertexSet> in_masks() const { return in_; }

  /// Degrees count parallel arcs.
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;

  /// Throws Error{VertexOutOfRange}.
  void check_vertex(Vertex v) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b);

 private:
  DiGraph(int n, bool multi, std::vector<Arc> arcs);

  int n_ = 0;
  bool multi_ = false;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// An induced subdigraph together with the maps between its dense ids and the
/// ids of the parent digraph.
struct InducedSubgraph {
  DiGraph graph;
  std::vector<Vertex> to_parent;    // sub id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> sub id, or -1

  VertexSet lift(VertexSet sub_set) const;
  VertexSet project(VertexSet parent_set) const;
};

/// Throws Error{EmptySubset} for an empty subset and VertexOutOfRange when
/// the subset is not contained in V(d).
InducedSubgraph induced(const DiGraph& d, VertexSet subset);

DiGraph reverse(const DiGraph& d);

/// In a multidigraph adding an existing arc raises its multiplicity.
DiGraph add_arc(const DiGraph& d, Vertex u, Vertex v);
/// Removes one occurrence. Throws Error{ArcAbsent}.
DiGraph remove_arc(const DiGraph& d, Vertex u, Vertex v);
DiGraph remove_arcs(const DiGraph& d, std::span<const std::pair<Vertex, Vertex>> arcs);

/// Same underlying arc sets after relabelling vertex i to perm[i].
DiGraph relabel(const DiGraph& d, std::span<const Vertex> perm);

/// A digraph whose vertices carry display names. Unnamed vertices print as
/// their index.
struct LabeledDigraph {
  DiGraph graph;
  std::vector<std::string> labels;

  std::string name(Vertex v) const;
  /// Throws Error{VertexOutOfRange} for an unknown name.
  Vertex vertex(std::string_view name) const;
  std::vector<Vertex> vertices(std::initializer_list<std::string_view> names) const;
};

}  // namespace branchpair
