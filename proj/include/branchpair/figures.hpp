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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branchpair/branching.hpp"
#include "branchpair/digraph.hpp"

namespace branchpair {

/// A small named digraph, optionally with a good pair drawn on it. Arcs are
/// given over the pattern's own vertex ids 0..labels.size()-1.
struct FigurePattern {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::vector<std::pair<Vertex, Vertex>> in_arcs;   // empty when no pair is drawn
  std::vector<std::pair<Vertex, Vertex>> out_arcs;

  int order() const { return static_cast<int>(labels.size()); }
  bool has_pair() const { return !in_arcs.empty() || !out_arcs.empty(); }
  LabeledDigraph digraph() const;
  /// The drawn pair; roots are the vertices left without an outgoing arc of
  /// the in-branching / an incoming arc of the out-branching.
  GoodPair pair() const;
};

/// Throws Error{InvalidParameters} for an unknown name.
const FigurePattern& figure(std::string_view name);
std::span<const FigurePattern> all_figures();

/// Drawn pairs for the order-4 semicomplete base cases, in lookup order.
std::span<const FigurePattern* const> semicomplete_base_cases();
/// Drawn pairs for the order-6 co-bipartite base cases.
std::span<const FigurePattern* const> cobipartite_base_cases();

/// Places the pattern inside d (same order) so that its arcs are arcs of d
/// and the drawn roots land on the requested vertices; returns the drawn pair
/// in d's ids. Labelings are tried in lexicographic order.
std::optional<GoodPair> match_figure(const DiGraph& d, const FigurePattern& p,
                                     std::optional<Vertex> in_root = std::nullopt,
                                     std::optional<Vertex> out_root = std::nullopt);

}  // namespace branchpair
