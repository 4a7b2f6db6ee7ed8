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

#include <span>
#include <string>
#include <vector>

#include "branchpair/digraph.hpp"

namespace branchpair {

enum class Orientation { Out, In };

/// A rooted spanning tree whose arcs all point away from the root (Out) or
/// towards it (In). Each non-root vertex v in the support owns exactly one
/// arc: for Out it is (link(v), v), for In it is (v, link(v)).
///
/// A branching may cover only part of the host digraph while it is being
/// built; validate_branching() insists on a spanning support.
class Branching {
 public:
  Branching() = default;
  Branching(Orientation orientation, int n, Vertex root);

  /// Path v0 v1 ... vk as an out-branching rooted at v0 or an in-branching
  /// rooted at vk.
  static Branching from_path(Orientation orientation, int n, std::span<const Vertex> path);

  Orientation orientation() const { return orientation_; }
  Vertex root() const { return root_; }
  VertexSet support() const { return support_; }
  int host_order() const { return static_cast<int>(link_.size()); }
  /// Other endpoint of the arc owned by v; -1 for the root or for vertices
  /// outside the support.
  Vertex link(Vertex v) const { return link_[v]; }

  /// Adds v (outside the support) together with the arc joining it to `other`
  /// (inside the support).
  void attach(Vertex v, Vertex other);
  /// Replaces the arc owned by v (v in the support, not the root).
  void relink(Vertex v, Vertex other);
  /// Makes v (outside the support) the new root, joined to the old one.
  void grow_root(Vertex v);

  /// Owned arc of non-root support vertex v, oriented as in the digraph.
  Arc arc_of(Vertex v) const;
  /// All arcs, sorted by (tail, head).
  std::vector<Arc> arcs() const;

  /// Same tree with every arc reversed (Out <-> In).
  Branching reversed() const;
  /// Re-expresses a branching of a subdigraph in host ids: sub vertex i
  /// becomes to_host[i].
  Branching lifted(std::span<const Vertex> to_host, int host_n) const;

  friend bool operator==(const Branching&, const Branching&) = default;

 private:
  Orientation orientation_ = Orientation::Out;
  Vertex root_ = 0;
  VertexSet support_;
  std::vector<Vertex> link_;
};

/// An in-branching and an out-branching of the same digraph that share no arc
/// occurrence.
struct GoodPair {
  Branching in;
  Branching out;

  GoodPair reversed() const { return GoodPair{out.reversed(), in.reversed()}; }
  GoodPair lifted(std::span<const Vertex> to_host, int host_n) const {
    return GoodPair{in.lifted(to_host, host_n), out.lifted(to_host, host_n)};
  }
  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

struct Validation {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Validation failure(std::string why) { return Validation{false, std::move(why)}; }
};

/// Checks b is a spanning branching of d.
Validation validate_branching(const DiGraph& d, const Branching& b);
/// Checks b is a branching of the subdigraph induced by `span`.
Validation validate_branching_on(const DiGraph& d, VertexSet span, const Branching& b);

Validation validate_good_pair(const DiGraph& d, const GoodPair& p);
Validation validate_good_pair_on(const DiGraph& d, VertexSet span, const GoodPair& p);

/// Arc occurrences used by both branchings beyond the available multiplicity.
std::vector<Arc> shared_arcs(const DiGraph& d, const GoodPair& p);

}  // namespace branchpair
