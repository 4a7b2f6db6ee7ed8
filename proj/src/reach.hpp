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

// Reachability on raw out-neighbourhood masks, shared by the analysis and the
// oracle hot loop.

#include <array>
#include <bit>
#include <cstdint>

#include "branchpair/vertex_set.hpp"

namespace branchpair::detail {

using Masks = std::array<std::uint64_t, kMaxVertices>;

/// reach[v] = set reachable from v (v included), by bitset Warshall.
inline void transitive_closure(const std::uint64_t* out, int n, Masks& reach) {
  for (int v = 0; v < n; ++v) reach[v] = out[v] | (std::uint64_t{1} << v);
  for (int k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    const std::uint64_t rk = reach[k];
    for (int v = 0; v < n; ++v) {
      if (reach[v] & bit) reach[v] |= rk;
    }
  }
}

/// Vertices reachable from every vertex.
inline std::uint64_t in_generators(const std::uint64_t* out, int n) {
  Masks reach;
  transitive_closure(out, n, reach);
  std::uint64_t common = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int v = 0; v < n && common; ++v) common &= reach[v];
  return common;
}

/// Vertices reachable from v by a search over the masks.
inline std::uint64_t reach_from(const std::uint64_t* out, Vertex v) {
  std::uint64_t seen = std::uint64_t{1} << v;
  std::uint64_t frontier = seen;
  while (frontier) {
    const int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint64_t fresh = out[u] & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

}  // namespace branchpair::detail
