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

#include "branchpair/certificate.hpp"

#include <ostream>
#include <sstream>

namespace branchpair {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::PairFound: return "pair-found";
    case CertificateKind::Exception: return "exception";
    case CertificateKind::FourException: return "four-exception";
    case CertificateKind::ExhaustedSearch: return "exhausted-search";
  }
  return "unknown";
}

namespace {

std::string vertex_name(Vertex v, const LabeledDigraph* names) {
  return names ? names->name(v) : std::to_string(v);
}

std::string optional_name(const std::optional<Vertex>& v, const LabeledDigraph* names) {
  return v ? vertex_name(*v, names) : "*";
}

}  // namespace

std::string format_arcs(const std::vector<Arc>& arcs, const LabeledDigraph* names) {
  std::string out;
  for (const Arc& a : arcs) {
    if (!out.empty()) out += ',';
    out += vertex_name(a.tail, names) + ">" + vertex_name(a.head, names);
  }
  return out.empty() ? "-" : out;
}

void write_transcript(std::ostream& out, const Certificate& c, const LabeledDigraph* names) {
  out << "CERT " << to_string(c.kind) << '\n';
  if (!c.route.empty()) out << "ROUTE " << c.route << '\n';
  out << "ROOTS in=" << optional_name(c.root_in, names) << " out=" << optional_name(c.root_out, names) << '\n';
  if (c.pair) {
    out << "IN root=" << vertex_name(c.pair->in.root(), names) << " arcs=" << format_arcs(c.pair->in.arcs(), names)
        << '\n';
    out << "OUT root=" << vertex_name(c.pair->out.root(), names)
        << " arcs=" << format_arcs(c.pair->out.arcs(), names) << '\n';
  }
  if (c.exception) {
    out << "EXCEPTION r=" << vertex_name(c.exception->r, names) << " y=" << vertex_name(c.exception->y, names)
        << " z=" << vertex_name(c.exception->z, names) << '\n';
  }
  out << "STAT branchings=" << c.stats.branchings << " nodes=" << c.stats.nodes << " roots=" << c.stats.roots_tried
      << " side=" << (c.stats.dual ? "in" : "out") << '\n';
}

std::string transcript(const Certificate& c, const LabeledDigraph* names) {
  std::ostringstream out;
  write_transcript(out, c, names);
  return out.str();
}

}  // namespace branchpair
