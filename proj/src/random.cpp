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

#include "branchpair/random.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "branchpair/analysis.hpp"

namespace branchpair {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

DiGraph random_digraph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
    }
  }
  return DiGraph::build(n, arcs);
}

namespace {

void add_pair(std::vector<std::pair<Vertex, Vertex>>& arcs, Vertex u, Vertex v, Rng& rng, double two_cycle) {
  if (std::bernoulli_distribution(two_cycle)(rng)) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  } else if (std::bernoulli_distribution(0.5)(rng)) {
    arcs.emplace_back(u, v);
  } else {
    arcs.emplace_back(v, u);
  }
}

DiGraph semicomplete(int n, Rng& rng, double two_cycle, double drop) {
  std::bernoulli_distribution dropped(drop);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (drop > 0 && dropped(rng)) continue;
      add_pair(arcs, u, v, rng, two_cycle);
    }
  }
  return DiGraph::build(n, arcs);
}

}  // namespace

DiGraph random_semicomplete(int n, Rng& rng, double two_cycle) { return semicomplete(n, rng, two_cycle, 0.0); }

DiGraph random_semicomplete_noise(int n, Rng& rng, double drop) {
  return semicomplete(n, rng, std::uniform_real_distribution<double>(0.0, 0.6)(rng), drop);
}

DiGraph random_cobipartite(int n, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int n1 = std::uniform_int_distribution<int>(1, std::max(1, n / 2))(rng);
  std::vector<bool> first(n, false);
  for (int i = 0; i < n1; ++i) first[order[i]] = true;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_cycle = 0.6 * unit(rng);
  const double cross = 0.2 + 0.6 * unit(rng);
  std::bernoulli_distribution crossed(cross);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (first[u] == first[v] || crossed(rng)) add_pair(arcs, u, v, rng, two_cycle);
    }
  }
  return DiGraph::build(n, arcs);
}

std::optional<DiGraph> sample_alpha2(int n, int lambda_min, Rng& rng, int tries) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < tries; ++i) {
    DiGraph d = unit(rng) < 0.5 ? random_cobipartite(n, rng)
                                : random_semicomplete_noise(n, rng, unit(rng) * 3.0 / std::max(n, 3));
    if (independence_at_most(d, 2) && is_k_arc_strong(d, lambda_min)) return d;
  }
  return std::nullopt;
}

std::optional<DiGraph> sample_cobipartite(int n, int lambda_min, Rng& rng, int tries) {
  for (int i = 0; i < tries; ++i) {
    DiGraph d = random_cobipartite(n, rng);
    if (is_k_arc_strong(d, lambda_min)) return d;
  }
  return std::nullopt;
}

}  // namespace branchpair
