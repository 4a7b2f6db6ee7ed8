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
#include <string>
#include <string_view>
#include <vector>

#include "branchpair/branching.hpp"
#include "branchpair/digraph.hpp"

namespace branchpair {

enum class FamilyName {
  ST4,
  FourException,
  E4,
  F4,
  TT4,
  Dplus,
  Dminus,
  W,
  H4,
  WPrimeN,
  WS,
  StrongNotEnough,
  NoBranchU,
  BadMulti,
  Fig6Vertex,
  FigOrder6,
};

/// Parameters of a named family. Fields a family does not use are ignored.
struct FamilySpec {
  FamilyName name = FamilyName::W;
  /// FourException: bit 0 adds dc, bit 1 adds cb. Fig6Vertex: 0 left,
  /// 1 right. FigOrder6: 1..3.
  int variant = 0;
  int n = 9;  // WPrimeN: total order, >= 9
  int k = 1;  // StrongNotEnough: required minimum semidegree of T1, T2
  int r = 2;  // NoBranchU: size of the complete digraph X
  /// WPrimeN, WS: the strong semicomplete S. Defaults: WPrimeN uses one
  /// vertex, a 2-cycle, or near_transitive_tournament(n - 8); WS uses a
  /// 2-cycle.
  std::optional<DiGraph> s;
  /// StrongNotEnough: strong tournaments T1, T2 with min semidegree >= k.
  std::optional<DiGraph> t1;
  std::optional<DiGraph> t2;
  /// NoBranchU: host H with roots s, t by label (default W, c2, c1).
  std::optional<LabeledDigraph> host;
  std::string host_s = "c2";
  std::string host_t = "c1";
};

struct FamilyInstance {
  LabeledDigraph digraph;
  std::optional<GoodPair> drawn_pair;  // figures that show a good pair
  std::optional<Vertex> identified;    // NoBranchU: the shared vertex x
};

/// Throws Error{InvalidParameters}.
FamilyInstance generate(const FamilySpec& spec);

/// "W", "H4", "WPrimeN:10", "FourException:3", "StrongNotEnough:2",
/// "NoBranchU:3", "Fig6Vertex:1", "FigOrder6:2", ...
/// Throws Error{InvalidParameters}.
FamilySpec parse_family(std::string_view text);
std::string family_label(const FamilySpec& spec);
std::vector<std::string> family_names();

/// Rotational tournament on 2k+1 vertices: i -> i+1, ..., i+k (mod 2k+1).
DiGraph rotational_tournament(int k);
/// Transitive tournament on m vertices with the arc 0 -> m-1 reversed
/// (strong for m >= 3).
DiGraph near_transitive_tournament(int m);

struct SanityCheck {
  std::string quantity;  // "lambda", "alpha", "delta0", "strong", "semicomplete"
  int claimed = 0;
  int computed = 0;
  bool at_least = false;  // claimed is a lower bound

  bool ok() const { return at_least ? computed >= claimed : computed == claimed; }
};

struct SanityReport {
  std::string family;
  std::vector<SanityCheck> checks;

  bool ok() const;
};

/// Computes the family's parameters and compares them to the stated values.
SanityReport sanity(const FamilySpec& spec);

}  // namespace branchpair
