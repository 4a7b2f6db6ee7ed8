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

#include <string_view>
#include <utility>

#include "branchpair/families.hpp"
#include "branchpair/oracle.hpp"

namespace branchpair::testing {

inline LabeledDigraph family(std::string_view name) { return generate(parse_family(name)).digraph; }

inline std::pair<Vertex, Vertex> arc(const LabeledDigraph& d, std::string_view u, std::string_view v) {
  return {d.vertex(u), d.vertex(v)};
}

inline bool has_pair(const DiGraph& d, std::optional<Vertex> in = {}, std::optional<Vertex> out = {}) {
  return oracle_good_pair(d, in, out).found();
}

}  // namespace branchpair::testing
