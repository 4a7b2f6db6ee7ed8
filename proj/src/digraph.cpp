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

#include "branchpair/digraph.hpp"

#include <algorithm>
#include <string>

namespace branchpair {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DuplicateArcInSimpleDigraph: return "DuplicateArcInSimpleDigraph";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::ArcAbsent: return "ArcAbsent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InconsistentHeader: return "InconsistentHeader";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::NotSemicomplete: return "NotSemicomplete";
    case ErrorCode::NoSuchCycle: return "NoSuchCycle";
    case ErrorCode::RootCannotReachAll: return "RootCannotReachAll";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
  }
  return "UnknownError";
}

DiGraph::DiGraph(int n, bool multi, std::vector<Arc> arcs)
    : n_(n), multi_(multi), arcs_(std::move(arcs)), out_(n), in_(n) {
  for (const Arc& a : arcs_) {
    out_[a.tail].insert(a.head);
    in_[a.head].insert(a.tail);
  }
}

DiGraph DiGraph::build(int n, std::span<const std::pair<Vertex, Vertex>> arcs, bool multi) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  std::vector<Arc> sorted;
  sorted.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(u));
    sorted.push_back(Arc{u, v, 1});
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<Arc> merged;
  merged.reserve(sorted.size());
  for (const Arc& a : sorted) {
    if (!merged.empty() && merged.back() == a) {
      if (!multi) {
        throw Error(ErrorCode::DuplicateArcInSimpleDigraph,
                    "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") repeated");
      }
      ++merged.back().multiplicity;
    } else {
      merged.push_back(a);
    }
  }
  return DiGraph(n, multi, std::move(merged));
}

DiGraph DiGraph::from_arcs(int n, std::vector<Arc> arcs, bool multi) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "arc endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (a.tail == a.head) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(a.tail));
    if ((i > 0 && arcs[i - 1] == a) || (!multi && a.multiplicity != 1) || a.multiplicity < 1) {
      throw Error(ErrorCode::DuplicateArcInSimpleDigraph,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") repeated");
    }
  }
  return DiGraph(n, multi, std::move(arcs));
}

DiGraph DiGraph::from_out_masks(std::span<const std::uint64_t> out) {
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < out.size(); ++u) {
    for (Vertex v : VertexSet(out[u])) arcs.push_back(Arc{static_cast<Vertex>(u), v, 1});
  }
  return DiGraph(static_cast<int>(out.size()), false, std::move(arcs));
}

int DiGraph::total_multiplicity() const {
  int total = 0;
  for (const Arc& a : arcs_) total += a.multiplicity;
  return total;
}

int DiGraph::multiplicity(Vertex u, Vertex v) const {
  if (!has_arc(u, v)) return 0;
  if (!multi_) return 1;
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v, 1});
  return it->multiplicity;
}

int DiGraph::out_degree(Vertex v) const {
  if (!multi_) return out_[v].size();
  int d = 0;
  for (Vertex w : out_[v]) d += multiplicity(v, w);
  return d;
}

int DiGraph::in_degree(Vertex v) const {
  if (!multi_) return in_[v].size();
  int d = 0;
  for (Vertex w : in_[v]) d += multiplicity(w, v);
  return d;
}

void DiGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
  }
}

bool operator==(const DiGraph& a, const DiGraph& b) {
  if (a.n_ != b.n_ || a.multi_ != b.multi_ || a.arcs_.size() != b.arcs_.size()) return false;
  for (std::size_t i = 0; i < a.arcs_.size(); ++i) {
    if (a.arcs_[i] != b.arcs_[i] || a.arcs_[i].multiplicity != b.arcs_[i].multiplicity) return false;
  }
  return true;
}

VertexSet InducedSubgraph::lift(VertexSet sub_set) const {
  VertexSet out;
  for (Vertex v : sub_set) out.insert(to_parent[v]);
  return out;
}

VertexSet InducedSubgraph::project(VertexSet parent_set) const {
  VertexSet out;
  for (Vertex v : parent_set) {
    if (from_parent[v] >= 0) out.insert(from_parent[v]);
  }
  return out;
}

InducedSubgraph induced(const DiGraph& d, VertexSet subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "induced subdigraph of empty set");
  if (!subset.is_subset_of(d.vertices())) {
    throw Error(ErrorCode::VertexOutOfRange, "subset not contained in V(d)");
  }
  InducedSubgraph sub;
  sub.from_parent.assign(d.order(), -1);
  for (Vertex v : subset) {
    sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (subset.contains(a.tail) && subset.contains(a.head)) {
      arcs.push_back(Arc{sub.from_parent[a.tail], sub.from_parent[a.head], a.multiplicity});
    }
  }
  sub.graph = DiGraph::from_arcs(subset.size(), std::move(arcs), d.is_multi());
  return sub;
}

DiGraph reverse(const DiGraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) arcs.push_back(Arc{a.head, a.tail, a.multiplicity});
  return DiGraph::from_arcs(d.order(), std::move(arcs), d.is_multi());
}

DiGraph add_arc(const DiGraph& d, Vertex u, Vertex v) {
  d.check_vertex(u);
  d.check_vertex(v);
  if (u == v) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(u));
  std::vector<Arc> arcs = d.arcs();
  auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{u, v, 1});
  if (it != arcs.end() && *it == Arc{u, v, 1}) {
    if (!d.is_multi()) {
      throw Error(ErrorCode::DuplicateArcInSimpleDigraph,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
    }
    ++it->multiplicity;
  } else {
    arcs.insert(it, Arc{u, v, 1});
  }
  return DiGraph::from_arcs(d.order(), std::move(arcs), d.is_multi());
}

DiGraph remove_arc(const DiGraph& d, Vertex u, Vertex v) {
  std::pair<Vertex, Vertex> one[] = {{u, v}};
  return remove_arcs(d, one);
}

DiGraph remove_arcs(const DiGraph& d, std::span<const std::pair<Vertex, Vertex>> to_remove) {
  std::vector<Arc> arcs = d.arcs();
  for (auto [u, v] : to_remove) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{u, v, 1});
    if (it == arcs.end() || *it != Arc{u, v, 1}) {
      throw Error(ErrorCode::ArcAbsent, "arc (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    }
    if (--it->multiplicity == 0) arcs.erase(it);
  }
  return DiGraph::from_arcs(d.order(), std::move(arcs), d.is_multi());
}

DiGraph relabel(const DiGraph& d, std::span<const Vertex> perm) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (const Arc& a : d.arcs()) {
    for (int k = 0; k < a.multiplicity; ++k) arcs.emplace_back(perm[a.tail], perm[a.head]);
  }
  return DiGraph::build(d.order(), arcs, d.is_multi());
}

std::string LabeledDigraph::name(Vertex v) const {
  if (v >= 0 && v < static_cast<Vertex>(labels.size()) && !labels[v].empty()) return labels[v];
  return std::to_string(v);
}

Vertex LabeledDigraph::vertex(std::string_view name) const {
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (this->name(v) == name) return v;
  }
  throw Error(ErrorCode::VertexOutOfRange, "no vertex named '" + std::string(name) + "'");
}

std::vector<Vertex> LabeledDigraph::vertices(std::initializer_list<std::string_view> names) const {
  std::vector<Vertex> out;
  for (std::string_view n : names) out.push_back(vertex(n));
  return out;
}

}  // namespace branchpair
