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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "branchpair/branching.hpp"
#include "branchpair/digraph.hpp"

namespace branchpair {

// Text format:
//
//   digraph            (or "multidigraph")
//   <n>
//   <tail> <head>      one line per arc occurrence, 0-based
//
// Blank lines and lines starting with '#' are ignored, except that
// "# label <i> <name>" names vertex i.

/// Throws SyntaxError, Error{InconsistentHeader} and the build() errors.
DiGraph parse_text(std::string_view text);
LabeledDigraph parse_labeled_text(std::string_view text);
LabeledDigraph read_labeled_file(const std::string& path);

/// Arcs in (tail, head) order, one line per occurrence.
std::string emit_text(const DiGraph& d);
/// As emit_text, with the labels as "# label" comments after the header.
std::string emit_text(const LabeledDigraph& d);

/// Graphviz digraph; in-branching arcs red, out-branching arcs blue, others
/// black. Parallel arcs are drawn as separate edges.
std::string emit_dot(const DiGraph& d, const std::optional<GoodPair>& highlight = std::nullopt);
std::string emit_dot(const LabeledDigraph& d, const std::optional<GoodPair>& highlight = std::nullopt);

}  // namespace branchpair
