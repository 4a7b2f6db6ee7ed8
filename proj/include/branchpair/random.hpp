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

#include <cstdint>
#include <optional>
#include <random>

#include "branchpair/digraph.hpp"

namespace branchpair {

using Rng = std::mt19937_64;

/// Seeded generator for stream `stream` of a run; independent of how the
/// streams are later spread over workers.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Each ordered pair becomes an arc with probability p.
DiGraph random_digraph(int n, double p, Rng& rng);

/// Every pair adjacent; a pair is a 2-cycle with probability `two_cycle`,
/// otherwise a single arc in a uniform direction.
DiGraph random_semicomplete(int n, Rng& rng, double two_cycle = 0.3);

/// Two semicomplete sides of random sizes; each cross pair is empty,
/// one-way or a 2-cycle.
DiGraph random_cobipartite(int n, Rng& rng);

/// Random semicomplete digraph with a few adjacent pairs made
/// non-adjacent (each with probability `drop`).
DiGraph random_semicomplete_noise(int n, Rng& rng, double drop);

/// Rejection samplers for the solver hypotheses. Absent after `tries`
/// rejected draws.
std::optional<DiGraph> sample_alpha2(int n, int lambda_min, Rng& rng, int tries = 100000);
std::optional<DiGraph> sample_cobipartite(int n, int lambda_min, Rng& rng, int tries = 100000);

}  // namespace branchpair
