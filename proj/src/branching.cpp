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

#include "branchpair/branching.hpp"

#include <algorithm>
#include <string>

namespace branchpair {

namespace {

std::string arc_text(Vertex u, Vertex v) { return std::to_string(u) + "->" + std::to_string(v); }

}  // namespace

Branching::Branching(Orientation orientation, int n, Vertex root)
    : orientation_(orientation), root_(root), support_(VertexSet::single(root)), link_(n, -1) {}

Branching Branching::from_path(Orientation orientation, int n, std::span<const Vertex> path) {
  if (orientation == Orientation::Out) {
    Branching b(orientation, n, path.front());
    for (std::size_t i = 1; i < path.size(); ++i) b.attach(path[i], path[i - 1]);
    return b;
  }
  Branching b(orientation, n, path.back());
  for (std::size_t i = path.size() - 1; i-- > 0;) b.attach(path[i], path[i + 1]);
  return b;
}

void Branching::attach(Vertex v, Vertex other) {
  if (support_.contains(v) || !support_.contains(other)) {
    throw Error(ErrorCode::PreconditionViolated, "attach " + std::to_string(v) + " via " + std::to_string(other));
  }
  support_.insert(v);
  link_[v] = other;
}

void Branching::relink(Vertex v, Vertex other) {
  if (!support_.contains(v) || v == root_ || !support_.contains(other)) {
    throw Error(ErrorCode::PreconditionViolated, "relink " + std::to_string(v) + " via " + std::to_string(other));
  }
  link_[v] = other;
}

void Branching::grow_root(Vertex v) {
  if (support_.contains(v)) {
    throw Error(ErrorCode::PreconditionViolated, "new root " + std::to_string(v) + " already covered");
  }
  support_.insert(v);
  link_[root_] = v;
  root_ = v;
}

Arc Branching::arc_of(Vertex v) const {
  return orientation_ == Orientation::Out ? Arc{link_[v], v, 1} : Arc{v, link_[v], 1};
}

std::vector<Arc> Branching::arcs() const {
  std::vector<Arc> out;
  for (Vertex v : support_) {
    if (v != root_) out.push_back(arc_of(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Branching Branching::reversed() const {
  Branching b = *this;
  b.orientation_ = orientation_ == Orientation::Out ? Orientation::In : Orientation::Out;
  return b;
}

Branching Branching::lifted(std::span<const Vertex> to_host, int host_n) const {
  Branching b(orientation_, host_n, to_host[root_]);
  for (Vertex v : support_) {
    b.support_.insert(to_host[v]);
    if (v != root_) b.link_[to_host[v]] = to_host[link_[v]];
  }
  return b;
}

Validation validate_branching_on(const DiGraph& d, VertexSet span, const Branching& b) {
  const int n = d.order();
  if (b.host_order() != n) {
    return Validation::failure("branching built for " + std::to_string(b.host_order()) + " vertices, digraph has " +
                               std::to_string(n));
  }
  if (b.support() != span) return Validation::failure("not spanning: support differs from the vertex set");
  if (!span.contains(b.root())) return Validation::failure("root outside the vertex set");
  for (Vertex v : span) {
    if (v == b.root()) {
      if (b.link(v) != -1) return Validation::failure("root " + std::to_string(v) + " owns an arc");
      continue;
    }
    const Vertex w = b.link(v);
    if (w < 0 || !span.contains(w)) {
      return Validation::failure("vertex " + std::to_string(v) + " is not joined inside the vertex set");
    }
    const Arc a = b.arc_of(v);
    if (!d.has_arc(a.tail, a.head)) return Validation::failure("arc " + arc_text(a.tail, a.head) + " not in digraph");
    // Following links must reach the root within |span| steps.
    Vertex x = v;
    int steps = 0;
    while (x != b.root() && steps <= span.size()) {
      x = b.link(x);
      ++steps;
    }
    if (x != b.root()) return Validation::failure("cycle through vertex " + std::to_string(v));
  }
  return {};
}

Validation validate_branching(const DiGraph& d, const Branching& b) {
  return validate_branching_on(d, d.vertices(), b);
}

std::vector<Arc> shared_arcs(const DiGraph& d, const GoodPair& p) {
  std::vector<Arc> in_arcs = p.in.arcs();
  std::vector<Arc> out_arcs = p.out.arcs();
  std::vector<Arc> common;
  std::set_intersection(in_arcs.begin(), in_arcs.end(), out_arcs.begin(), out_arcs.end(), std::back_inserter(common));
  std::erase_if(common, [&](const Arc& a) { return d.multiplicity(a.tail, a.head) >= 2; });
  return common;
}

Validation validate_good_pair_on(const DiGraph& d, VertexSet span, const GoodPair& p) {
  if (p.in.orientation() != Orientation::In) return Validation::failure("first branching is not an in-branching");
  if (p.out.orientation() != Orientation::Out) return Validation::failure("second branching is not an out-branching");
  if (Validation v = validate_branching_on(d, span, p.in); !v) return Validation::failure("in-branching: " + v.reason);
  if (Validation v = validate_branching_on(d, span, p.out); !v) {
    return Validation::failure("out-branching: " + v.reason);
  }
  if (auto common = shared_arcs(d, p); !common.empty()) {
    return Validation::failure("arc " + arc_text(common.front().tail, common.front().head) + " used by both");
  }
  return {};
}

Validation validate_good_pair(const DiGraph& d, const GoodPair& p) {
  return validate_good_pair_on(d, d.vertices(), p);
}

}  // namespace branchpair
