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

#include "branchpair/analysis.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <string>
#include <unordered_set>

#include "reach.hpp"

namespace branchpair {

namespace {

std::vector<std::uint64_t> out_bits(const DiGraph& d) {
  std::vector<std::uint64_t> out(d.order());
  for (Vertex v = 0; v < d.order(); ++v) out[v] = d.out_neighbors(v).bits();
  return out;
}

// Tarjan's algorithm; components are emitted sinks first.
struct Tarjan {
  const DiGraph& d;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<Vertex> stack;
  std::vector<VertexSet> emitted;
  int counter = 0;

  explicit Tarjan(const DiGraph& g)
      : d(g), index(g.order(), -1), low(g.order(), 0), comp(g.order(), -1), on_stack(g.order(), false) {}

  void visit(Vertex v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Vertex w : d.out_neighbors(v)) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      VertexSet members;
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        members.insert(w);
      } while (w != v);
      emitted.push_back(members);
    }
  }
};

// Visited-state memo for the path searches: a (visited set, endpoint) state
// recorded here is known to have no completion.
class DeadStates {
 public:
  explicit DeadStates(int n) : n_(n) {
    if (n <= 16) dense_.assign((std::size_t{1} << n) * n, false);
  }
  bool contains(std::uint64_t mask, Vertex v) const {
    if (n_ <= 16) return dense_[mask * n_ + v];
    return sparse_.contains(Key{mask, v});
  }
  void insert(std::uint64_t mask, Vertex v) {
    if (n_ <= 16) {
      dense_[mask * n_ + v] = true;
    } else {
      sparse_.insert(Key{mask, v});
    }
  }

 private:
  struct Key {
    std::uint64_t mask;
    Vertex v;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.mask * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k.v));
    }
  };
  int n_;
  std::vector<bool> dense_;
  std::unordered_set<Key, KeyHash> sparse_;
};

}  // namespace

SccDecomposition strong_components(const DiGraph& d) {
  Tarjan t(d);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (t.index[v] < 0) t.visit(v);
  }
  SccDecomposition scc;
  const int k = static_cast<int>(t.emitted.size());
  scc.members.assign(t.emitted.rbegin(), t.emitted.rend());
  scc.component.assign(d.order(), -1);
  for (int c = 0; c < k; ++c) {
    for (Vertex v : scc.members[c]) scc.component[v] = c;
  }
  scc.dag_out.assign(k, 0);
  std::vector<bool> has_in(k, false);
  for (const Arc& a : d.arcs()) {
    const int cu = scc.component[a.tail];
    const int cv = scc.component[a.head];
    if (cu != cv) {
      scc.dag_out[cu] |= std::uint64_t{1} << cv;
      has_in[cv] = true;
    }
  }
  for (int c = 0; c < k; ++c) {
    if (!has_in[c]) scc.initial.push_back(c);
    if (scc.dag_out[c] == 0) scc.terminal.push_back(c);
  }
  return scc;
}

bool is_strong(const DiGraph& d) {
  if (d.order() <= 1) return true;
  return reachable_from(d, 0) == d.vertices() && reaching(d, 0) == d.vertices();
}

VertexSet reachable_from(const DiGraph& d, Vertex v) {
  d.check_vertex(v);
  auto out = out_bits(d);
  return VertexSet(detail::reach_from(out.data(), v));
}

VertexSet reaching(const DiGraph& d, Vertex v) {
  d.check_vertex(v);
  std::vector<std::uint64_t> in(d.order());
  for (Vertex u = 0; u < d.order(); ++u) in[u] = d.in_neighbors(u).bits();
  return VertexSet(detail::reach_from(in.data(), v));
}

int max_flow(const DiGraph& d, Vertex s, Vertex t, int limit) {
  d.check_vertex(s);
  d.check_vertex(t);
  const int n = d.order();
  if (s == t) return limit;
  std::vector<int> cap(static_cast<std::size_t>(n) * n, 0);
  for (const Arc& a : d.arcs()) cap[a.tail * n + a.head] += a.multiplicity;
  int flow = 0;
  std::vector<Vertex> parent(n);
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty() && parent[t] < 0) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u * n + v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] < 0) break;
    for (Vertex v = t; v != s; v = parent[v]) {
      --cap[parent[v] * n + v];
      ++cap[v * n + parent[v]];
    }
    ++flow;
  }
  return flow;
}

int arc_connectivity(const DiGraph& d) {
  if (d.order() < 2) throw Error(ErrorCode::TooFewVertices, "arc connectivity needs n >= 2");
  int best = d.total_multiplicity();
  for (Vertex u = 1; u < d.order() && best > 0; ++u) {
    best = std::min(best, max_flow(d, 0, u, best));
    best = std::min(best, max_flow(d, u, 0, best));
  }
  return best;
}

bool is_k_arc_strong(const DiGraph& d, int k) {
  if (k <= 0) return true;
  if (d.order() < 2) return false;
  if (min_semidegree(d) < k) return false;
  for (Vertex u = 1; u < d.order(); ++u) {
    if (max_flow(d, 0, u, k) < k || max_flow(d, u, 0, k) < k) return false;
  }
  return true;
}

int min_semidegree(const DiGraph& d) {
  if (d.order() == 0) return 0;
  int best = d.total_multiplicity();
  for (Vertex v = 0; v < d.order(); ++v) best = std::min({best, d.out_degree(v), d.in_degree(v)});
  return best;
}

namespace {

// Branch and bound for a maximum independent set; the bound is a greedy
// cover of the candidates by cliques of the underlying graph.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const DiGraph& d, int stop_above) : n_(d.order()), stop_above_(stop_above) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = d.neighbors(v).bits();
  }

  IndependentSet run() {
    expand(VertexSet::all(n_).bits(), 0, 0);
    return best_;
  }

 private:
  int clique_cover_bound(std::uint64_t cand) const {
    int cliques = 0;
    while (cand) {
      std::uint64_t clique_cand = cand;
      while (clique_cand) {
        const int v = std::countr_zero(clique_cand);
        cand &= ~(std::uint64_t{1} << v);
        clique_cand &= adj_[v];
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(std::uint64_t cand, int size, std::uint64_t chosen) {
    if (best_.size > stop_above_) return;
    if (cand == 0) {
      if (size > best_.size) best_ = IndependentSet{size, VertexSet(chosen)};
      return;
    }
    if (size + clique_cover_bound(cand) <= best_.size) return;
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    expand(cand & ~adj_[v] & ~bit, size + 1, chosen | bit);
    // Excluding v only helps if some neighbour of v can join instead.
    if (cand & adj_[v]) expand(cand & ~bit, size, chosen);
  }

  int n_;
  int stop_above_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  IndependentSet best_;
};

}  // namespace

IndependentSet independence_number(const DiGraph& d) {
  if (d.order() > 32) throw Error(ErrorCode::TooLarge, "independence number limited to n <= 32");
  return IndependentSetSearch(d, kMaxVertices).run();
}

bool independence_at_most(const DiGraph& d, int k) {
  if (d.order() > 32) throw Error(ErrorCode::TooLarge, "independence number limited to n <= 32");
  return IndependentSetSearch(d, k).run().size <= k;
}

bool is_semicomplete(const DiGraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if ((d.neighbors(v) | VertexSet::single(v)) != d.vertices()) return false;
  }
  return true;
}

bool is_tournament(const DiGraph& d) {
  if (!is_semicomplete(d)) return false;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.out_neighbors(v).intersects(d.in_neighbors(v))) return false;
  }
  return true;
}

std::optional<CoBipartition> co_bipartition(const DiGraph& d) {
  const int n = d.order();
  std::vector<int> colour(n, -1);
  CoBipartition part;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const VertexSet non_adjacent = d.vertices() - d.neighbors(u) - VertexSet::single(u);
      for (Vertex w : non_adjacent) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? part.first : part.second).insert(v);
  return part;
}

CoBipartition normalized(CoBipartition p) {
  if (p.second.empty() && p.first.size() >= 2) {
    const Vertex v = 63 - std::countl_zero(p.first.bits());
    p.first.erase(v);
    p.second.insert(v);
  }
  return p;
}

VertexSet in_generators(const DiGraph& d) {
  auto out = out_bits(d);
  return VertexSet(detail::in_generators(out.data(), d.order()));
}

VertexSet out_generators(const DiGraph& d) {
  auto out = out_bits(d);
  detail::Masks reach;
  detail::transitive_closure(out.data(), d.order(), reach);
  VertexSet result;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (reach[v] == d.vertices().bits()) result.insert(v);
  }
  return result;
}

void for_each_hamiltonian_path(const DiGraph& d, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = d.order();
  if (n > 16) throw Error(ErrorCode::TooLarge, "Hamiltonian path search limited to n <= 16");
  if (n == 0) return;
  const std::uint64_t all = d.vertices().bits();
  DeadStates dead(n);
  std::vector<Vertex> path;
  path.reserve(n);
  bool stopped = false;

  // Returns whether some completion was found from the current state.
  std::function<bool(std::uint64_t, Vertex)> extend = [&](std::uint64_t visited, Vertex at) -> bool {
    if (visited == all) {
      if (!visit(path)) stopped = true;
      return true;
    }
    if (dead.contains(visited, at)) return false;
    std::vector<Vertex> next;
    for (Vertex w : VertexSet(d.out_neighbors(at).bits() & ~visited)) next.push_back(w);
    // Fewest onward options first, then lowest index.
    std::stable_sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return std::popcount(d.out_neighbors(a).bits() & ~visited) <
             std::popcount(d.out_neighbors(b).bits() & ~visited);
    });
    bool found = false;
    for (Vertex w : next) {
      path.push_back(w);
      found = extend(visited | (std::uint64_t{1} << w), w) || found;
      path.pop_back();
      if (stopped) return true;
    }
    if (!found) dead.insert(visited, at);
    return found;
  };

  std::vector<Vertex> starts(n);
  for (Vertex v = 0; v < n; ++v) starts[v] = v;
  std::stable_sort(starts.begin(), starts.end(),
                   [&](Vertex a, Vertex b) { return d.in_neighbors(a).size() < d.in_neighbors(b).size(); });
  for (Vertex s : starts) {
    path.assign(1, s);
    extend(std::uint64_t{1} << s, s);
    if (stopped) return;
  }
}

std::optional<std::vector<Vertex>> hamiltonian_path(const DiGraph& d, std::optional<Vertex> start,
                                                     std::optional<Vertex> end) {
  const int n = d.order();
  if (n > 16) throw Error(ErrorCode::TooLarge, "Hamiltonian path search limited to n <= 16");
  if (start) d.check_vertex(*start);
  if (end) d.check_vertex(*end);
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  if (start && end && *start == *end) return std::nullopt;
  if (!start && !end) {
    std::optional<std::vector<Vertex>> found;
    for_each_hamiltonian_path(d, [&](const std::vector<Vertex>& p) {
      found = p;
      return false;
    });
    return found;
  }
  // Fixed endpoints: a path from s to t is a Hamiltonian path of the digraph
  // where s has no in-arcs and t no out-arcs.
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (const Arc& a : d.arcs()) {
    if (start && a.head == *start) continue;
    if (end && a.tail == *end) continue;
    arcs.emplace_back(a.tail, a.head);
  }
  const DiGraph restricted = DiGraph::build(n, arcs);
  std::optional<std::vector<Vertex>> found;
  for_each_hamiltonian_path(restricted, [&](const std::vector<Vertex>& p) {
    if ((start && p.front() != *start) || (end && p.back() != *end)) return true;
    found = p;
    return false;
  });
  return found;
}

std::optional<std::vector<Vertex>> find_cycle_through(const DiGraph& d, Vertex v, int length) {
  d.check_vertex(v);
  const int n = d.order();
  if (length < 2 || length > n) return std::nullopt;
  DeadStates dead(n);
  std::vector<Vertex> path{v};
  std::function<bool(std::uint64_t, Vertex)> extend = [&](std::uint64_t visited, Vertex at) -> bool {
    if (static_cast<int>(path.size()) == length) return d.has_arc(at, v);
    if (dead.contains(visited, at)) return false;
    for (Vertex w : VertexSet(d.out_neighbors(at).bits() & ~visited)) {
      path.push_back(w);
      if (extend(visited | (std::uint64_t{1} << w), w)) return true;
      path.pop_back();
    }
    dead.insert(visited, at);
    return false;
  };
  if (!extend(std::uint64_t{1} << v, v)) return std::nullopt;
  path.push_back(v);
  return path;
}

std::vector<Vertex> hamiltonian_cycle_through(const DiGraph& d, Vertex v, std::optional<int> length) {
  d.check_vertex(v);
  if (!is_semicomplete(d)) throw Error(ErrorCode::NotSemicomplete, "cycle search needs a semicomplete digraph");
  if (!is_strong(d)) throw Error(ErrorCode::NotStrong, "cycle search needs a strong digraph");
  const int len = length.value_or(d.order());
  auto cycle = find_cycle_through(d, v, len);
  if (!cycle) {
    throw Error(ErrorCode::NoSuchCycle,
                "no cycle of length " + std::to_string(len) + " through vertex " + std::to_string(v));
  }
  return *cycle;
}

RamseyWitness ramsey_witness(const DiGraph& d) {
  const int n = d.order();
  if (n < 9) throw Error(ErrorCode::TooSmall, "Ramsey witness needs n >= 9");
  for (Vertex a = 0; a < n; ++a) {
    const VertexSet free_a = VertexSet::all(n) - d.neighbors(a) - VertexSet::all(a + 1);
    for (Vertex b : free_a) {
      const VertexSet free_ab = free_a - d.neighbors(b) - VertexSet::all(b + 1);
      if (!free_ab.empty()) return {RamseyWitness::Kind::IndependentTriple, VertexSet{a, b, free_ab.first()}};
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    const VertexSet na = d.neighbors(a) - VertexSet::all(a + 1);
    for (Vertex b : na) {
      const VertexSet nab = na & d.neighbors(b);
      for (Vertex c : nab) {
        const VertexSet nabc = (nab & d.neighbors(c)) - VertexSet::all(c + 1);
        if (!nabc.empty()) return {RamseyWitness::Kind::Clique4, VertexSet{a, b, c, nabc.first()}};
      }
    }
  }
  throw Error(ErrorCode::ConstructionFailed, "neither an independent triple nor a 4-clique");
}

}  // namespace branchpair
