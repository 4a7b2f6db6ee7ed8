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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "branchpair/branching.hpp"
#include "branchpair/digraph.hpp"

namespace branchpair {

enum class CertificateKind { PairFound, Exception, FourException, ExhaustedSearch };

std::string_view to_string(CertificateKind kind);

/// N^-(r) = {y} and N^-(y) = {z}.
struct ExceptionWitness {
  Vertex r = 0;
  Vertex y = 0;
  Vertex z = 0;
};

struct OracleStats {
  std::uint64_t branchings = 0;  // complete branchings reached
  std::uint64_t nodes = 0;       // search nodes visited
  int roots_tried = 0;
  bool dual = false;             // enumerated in-branchings instead
};

/// Reason a good pair exists (the pair itself) or does not.
struct Certificate {
  CertificateKind kind = CertificateKind::ExhaustedSearch;
  std::optional<Vertex> root_in;   // requested in-root, if constrained
  std::optional<Vertex> root_out;  // requested out-root, if constrained
  std::optional<GoodPair> pair;
  std::optional<ExceptionWitness> exception;
  OracleStats stats;
  std::string route;  // procedure that produced the certificate

  bool found() const { return kind == CertificateKind::PairFound; }
};

/// Arc list "a>b,c>d" in (tail, head) order, using labels when present.
std::string format_arcs(const std::vector<Arc>& arcs, const LabeledDigraph* names = nullptr);

/// Line-oriented transcript:
///   CERT <kind>
///   ROUTE <route>
///   ROOTS in=<v|*> out=<v|*>
///   IN root=<v> arcs=<list>          (pairs only)
///   OUT root=<v> arcs=<list>
///   EXCEPTION r=<v> y=<v> z=<v>      (exceptions only)
///   STAT branchings=<k> nodes=<k> roots=<k> side=out|in
void write_transcript(std::ostream& out, const Certificate& c, const LabeledDigraph* names = nullptr);
std::string transcript(const Certificate& c, const LabeledDigraph* names = nullptr);

}  // namespace branchpair
