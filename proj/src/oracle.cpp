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

#include "branchpair/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "branchpair/analysis.hpp"
#include "reach.hpp"

namespace branchpair {

namespace {

using detail::Masks;

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

// Builds a branching from parent links (parent[v] = -1 for the root and
// absent vertices).
Branching from_parents(Orientation orientation, int n, Vertex root, const std::vector<Vertex>& parent) {
  Branching b(orientation, n, root);
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < n; ++v) {
      if (v == root || parent[v] < 0 || b.support().contains(v)) continue;
      if (b.support().contains(parent[v])) {
        b.attach(v, parent[v]);
        progress = true;
      }
    }
  }
  return b;
}

// In-branching of the residual digraph rooted at r, by backward search with
// the lowest vertices first.
Branching residual_in_branching(const Masks& res_out, int n, Vertex r) {
  std::vector<Vertex> link(n, -1);
  std::uint64_t seen = bit(r);
  std::vector<Vertex> queue{r};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    for (Vertex w = 0; w < n; ++w) {
      if (!(seen & bit(w)) && (res_out[w] & bit(x))) {
        seen |= bit(w);
        link[w] = x;
        queue.push_back(w);
      }
    }
  }
  return from_parents(Orientation::In, n, r, link);
}

// Enumerates out-branchings of g by choosing an in-arc for every non-root
// vertex, in BFS order, rejecting choices that close a cycle.
class Enumerator {
 public:
  Enumerator(const DiGraph& g, Vertex root) : g_(g), n_(g.order()), root_(root), parent_(g.order(), -1) {
    for (Vertex v = 0; v < n_; ++v) {
      in_[v] = g.in_neighbors(v).bits();
      res_out_[v] = g.out_neighbors(v).bits();
      spare_[v] = 0;
    }
    if (g.is_multi()) {
      for (const Arc& a : g.arcs()) {
        if (a.multiplicity >= 2) spare_[a.tail] |= bit(a.head);
      }
    }
    order_.push_back(root);
    std::uint64_t seen = bit(root);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : g.out_neighbors(order_[i])) {
        if (!(seen & bit(w))) {
          seen |= bit(w);
          order_.push_back(w);
        }
      }
    }
  }

  bool spans() const { return static_cast<int>(order_.size()) == n_; }

  /// `prune(res_out)` may reject a partial choice; `leaf(parent, res_out)`
  /// returns false to stop.
  template <typename Prune, typename Leaf, typename Tick>
  void run(Prune&& prune, Leaf&& leaf, Tick&& tick) {
    stopped_ = false;
    descend(1, prune, leaf, tick);
  }

  const std::vector<Vertex>& parent() const { return parent_; }
  const Masks& residual() const { return res_out_; }

 private:
  bool closes_cycle(Vertex v, Vertex u) const {
    for (Vertex x = u; x >= 0; x = parent_[x]) {
      if (x == v) return true;
    }
    return false;
  }

  template <typename Prune, typename Leaf, typename Tick>
  void descend(std::size_t i, Prune& prune, Leaf& leaf, Tick& tick) {
    tick();
    if (i == order_.size()) {
      if (!leaf(parent_, res_out_)) stopped_ = true;
      return;
    }
    const Vertex v = order_[i];
    for (std::uint64_t tails = in_[v]; tails; tails &= tails - 1) {
      const Vertex u = std::countr_zero(tails);
      if (closes_cycle(v, u)) continue;
      parent_[v] = u;
      const std::uint64_t saved = res_out_[u];
      if (!(spare_[u] & bit(v))) res_out_[u] &= ~bit(v);
      if (prune(res_out_)) descend(i + 1, prune, leaf, tick);
      res_out_[u] = saved;
      parent_[v] = -1;
      if (stopped_) return;
    }
  }

  const DiGraph& g_;
  int n_;
  Vertex root_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  Masks in_{};
  Masks res_out_{};
  Masks spare_{};  // arcs with a second copy, left in the residual
  bool stopped_ = false;
};

double log_choices(const DiGraph& d, bool in_side) {
  double sum = 0;
  for (Vertex v = 0; v < d.order(); ++v) {
    const int k = in_side ? d.in_neighbors(v).size() : d.out_neighbors(v).size();
    if (k > 0) sum += std::log2(static_cast<double>(k));
  }
  return sum;
}

}  // namespace

void for_each_out_branching(const DiGraph& d, Vertex root, const std::function<bool(const Branching&)>& visit) {
  d.check_vertex(root);
  if (d.order() > 16) throw Error(ErrorCode::TooLarge, "branching enumeration limited to n <= 16");
  Enumerator e(d, root);
  if (!e.spans()) throw Error(ErrorCode::RootCannotReachAll, "root " + std::to_string(root) + " cannot reach all");
  e.run([](const Masks&) { return true; },
        [&](const std::vector<Vertex>& parent, const Masks&) {
          return visit(from_parents(Orientation::Out, d.order(), root, parent));
        },
        [] {});
}

std::vector<Branching> enumerate_out_branchings(const DiGraph& d, Vertex root) {
  std::vector<Branching> all;
  for_each_out_branching(d, root, [&](const Branching& b) {
    all.push_back(b);
    return true;
  });
  return all;
}

Certificate oracle_good_pair_among(const DiGraph& d, VertexSet in_roots, VertexSet out_roots,
                                   const OracleBudget& budget) {
  const int n = d.order();
  Certificate cert;
  cert.route = "oracle";
  if (n > budget.max_vertices) {
    throw BudgetExceeded("oracle limited to " + std::to_string(budget.max_vertices) + " vertices", cert.stats);
  }
  if (n == 0) throw Error(ErrorCode::TooFewVertices, "empty digraph");
  in_roots = in_roots & d.vertices();
  out_roots = out_roots & d.vertices();

  // Enumerating in-branchings of d is enumerating out-branchings of its
  // reverse; the roles of the root sets swap with it.
  const bool dual = log_choices(d, false) < log_choices(d, true);
  cert.stats.dual = dual;
  const DiGraph g = dual ? reverse(d) : d;
  const VertexSet enum_roots = dual ? in_roots : out_roots;
  const VertexSet residual_roots = dual ? out_roots : in_roots;

  const VertexSet feasible = enum_roots & out_generators(g);
  if (feasible.empty() || (residual_roots & in_generators(g)).empty()) {
    cert.kind = CertificateKind::ExhaustedSearch;
    return cert;
  }

  OracleStats& stats = cert.stats;
  auto tick = [&] {
    ++stats.nodes;
    if (budget.max_nodes && stats.nodes > budget.max_nodes) {
      throw BudgetExceeded("oracle node budget exhausted", stats);
    }
    if (budget.deadline && (stats.nodes & 1023) == 0 && std::chrono::steady_clock::now() > *budget.deadline) {
      throw BudgetExceeded("oracle deadline passed", stats);
    }
  };
  const std::uint64_t wanted = residual_roots.bits();
  auto prune = [&](const Masks& res_out) { return (detail::in_generators(res_out.data(), n) & wanted) != 0; };

  for (Vertex q : feasible) {
    ++stats.roots_tried;
    Enumerator e(g, q);
    std::optional<GoodPair> found;
    e.run(prune,
          [&](const std::vector<Vertex>& parent, const Masks& res_out) {
            ++stats.branchings;
            const std::uint64_t roots = detail::in_generators(res_out.data(), n) & wanted;
            const Vertex r = std::countr_zero(roots);
            found = GoodPair{residual_in_branching(res_out, n, r), from_parents(Orientation::Out, n, q, parent)};
            return false;
          },
          tick);
    if (found) {
      GoodPair pair = dual ? found->reversed() : *found;
      const Validation check = validate_good_pair(d, pair);
      if (!check) throw Error(ErrorCode::ConstructionFailed, "oracle produced an invalid pair: " + check.reason);
      cert.kind = CertificateKind::PairFound;
      cert.pair = std::move(pair);
      return cert;
    }
  }
  cert.kind = CertificateKind::ExhaustedSearch;
  return cert;
}

Certificate oracle_good_pair(const DiGraph& d, std::optional<Vertex> root_in, std::optional<Vertex> root_out,
                             const OracleBudget& budget) {
  if (root_in) d.check_vertex(*root_in);
  if (root_out) d.check_vertex(*root_out);
  Certificate cert = oracle_good_pair_among(d, root_in ? VertexSet::single(*root_in) : d.vertices(),
                                            root_out ? VertexSet::single(*root_out) : d.vertices(), budget);
  cert.root_in = root_in;
  cert.root_out = root_out;
  return cert;
}

std::optional<ExceptionWitness> is_exception(const DiGraph& d, Vertex r) {
  d.check_vertex(r);
  if (!is_semicomplete(d)) throw Error(ErrorCode::NotSemicomplete, "exceptions are defined for semicomplete digraphs");
  const VertexSet in_r = d.in_neighbors(r);
  if (in_r.size() != 1) return std::nullopt;
  const Vertex y = in_r.first();
  const VertexSet in_y = d.in_neighbors(y);
  if (in_y.size() != 1 || d.in_degree(y) != 1) return std::nullopt;
  return ExceptionWitness{r, y, in_y.first()};
}

bool is_4_exception(const DiGraph& d, Vertex a) {
  if (d.order() != 4) return false;
  d.check_vertex(a);
  // Pattern labels a=0, b=1, c=2, d=3.
  static constexpr std::array<std::pair<int, int>, 6> kCore{{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}}};
  static constexpr std::array<std::pair<int, int>, 2> kOptional{{{3, 2}, {2, 1}}};
  std::array<Vertex, 4> perm{0, 1, 2, 3};
  do {
    if (perm[0] != a) continue;
    std::uint64_t allowed = 0;
    bool core = true;
    for (auto [u, v] : kCore) {
      core = core && d.has_arc(perm[u], perm[v]);
      allowed |= bit(perm[u] * 4 + perm[v]);
    }
    if (!core) continue;
    for (auto [u, v] : kOptional) allowed |= bit(perm[u] * 4 + perm[v]);
    bool within = true;
    for (const Arc& arc : d.arcs()) within = within && (allowed & bit(arc.tail * 4 + arc.head));
    if (within) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace branchpair
