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

#include "branchpair/figures.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace branchpair {

namespace {

struct RawFigure {
  const char* name;
  const char* labels;
  const char* arcs;
  const char* in_arcs;
  const char* out_arcs;
};

// Arc lists use the labels, written "u>v".
constexpr std::array kRaw{
    RawFigure{"ST4", "a b c d", "a>b b>c c>d d>a a>c d>b", "", ""},
    RawFigure{"E4", "y x y' x'", "y>x x>y x'>y' y'>x' x>y' x'>y", "", ""},
    RawFigure{"F4", "a b c d", "a>b b>a c>d d>c b>c a>d", "a>b b>c c>d", "b>a a>d d>c"},
    RawFigure{"TT4", "a1 a2 a3 a4", "a1>a2 a1>a3 a1>a4 a2>a3 a2>a4 a3>a4", "a3>a4 a1>a3 a2>a4",
              "a1>a2 a2>a3 a1>a4"},
    RawFigure{"D+", "a1 a2 a3 b", "a1>a2 a2>a3 a3>a1 b>a1 b>a2 b>a3", "a1>a2 a2>a3 b>a1", "a3>a1 b>a2 b>a3"},
    RawFigure{"D-", "a1 a2 a3 b", "a1>a2 a2>a3 a3>a1 a1>b a2>b a3>b", "a2>a3 a1>b a3>b", "a1>a2 a3>a1 a2>b"},
    RawFigure{"ST4good-b", "a b c d", "a>b b>c c>d d>a a>c d>b", "c>d a>c d>b", "a>b b>c d>a"},
    RawFigure{"ST4good-c", "a b c d", "a>b b>c c>d d>a a>c d>b", "b>c a>c d>b", "a>b c>d d>a"},
    RawFigure{"ST4good-d", "a b c d", "a>b b>c c>d d>a a>c d>b", "a>b b>c c>d", "d>a a>c d>b"},
    RawFigure{"ST4+ba", "a b c d", "a>b b>c c>d d>a a>c d>b b>a", "c>d d>b b>a", "a>b b>c d>a"},
    RawFigure{"ST4+ad", "a b c d", "a>b b>c c>d d>a a>c d>b a>d", "b>c c>d d>a", "a>b a>c a>d"},
    RawFigure{"ST4+ca", "a b c d", "a>b b>c c>d d>a a>c d>b c>a", "b>c d>a c>a", "c>d a>c d>b"},
    RawFigure{"ST4+bd", "a b c d", "a>b b>c c>d d>a a>c d>b b>d", "b>c c>d d>a", "a>b a>c b>d"},
    RawFigure{"6vertex-left", "a1 b1 c1 a2 b2 c2",
              "a1>b1 b1>c1 c1>a1 a2>b2 b2>c2 c2>a2 a1>a2 a2>a1 b1>b2 b2>b1 c1>c2 c2>c1",
              "a1>b1 b2>c2 b1>b2 a2>a1 c1>a1", "a2>b2 b1>c1 a1>a2 c1>c2 b2>b1"},
    RawFigure{"6vertex-right", "a1 b1 c1 a2 b2 c2",
              "a1>b1 b1>c1 c1>a1 b2>a2 c2>b2 a2>c2 a1>a2 a2>a1 b1>b2 b2>b1 c1>c2 c2>c1",
              "a1>b1 b1>c1 b2>a2 c1>c2 a2>a1", "c2>b2 a2>c2 a1>a2 b2>b1 c2>c1"},
    RawFigure{"order6-1", "a1 b1 c1 a2 b2 c2",
              "a1>b1 b1>c1 a1>c1 a2>b2 b2>c2 a2>c2 c1>a2 c1>b2 b1>a2 c2>a1 c2>b1 b2>a1",
              "a1>b1 b1>c1 a2>b2 b2>c2 c1>a2", "a1>c1 a2>c2 c1>b2 c2>a1 c2>b1"},
    RawFigure{"order6-2", "a1 b1 c1 a2 b2 c2",
              "a1>b1 b1>c1 a1>c1 a2>b2 b2>c2 c2>a2 c1>a2 c1>b2 a2>b1 c2>a1 b1>c2 b2>a1",
              "a1>b1 b1>c1 c1>a2 a2>b2 b2>c2", "a1>c1 c2>a2 c1>b2 a2>b1 c2>a1"},
    RawFigure{"order6-3", "a1 b1 c1 a2 b2 c2",
              "a1>b1 b1>c1 a1>c1 b2>a2 c2>b2 a2>c2 c1>a2 c1>b2 a2>b1 c2>a1 b1>c2 b2>a1",
              "a1>b1 b1>c1 c1>a2 c2>b2 b2>a2", "a1>c1 a2>c2 c1>b2 a2>b1 c2>a1"},
};

std::vector<std::string> words(const char* text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> parse_arcs(const char* text, const std::vector<std::string>& labels) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  auto index = [&](const std::string& name) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw Error(ErrorCode::InvalidParameters, "figure label " + name);
    return static_cast<Vertex>(it - labels.begin());
  };
  for (const std::string& w : words(text)) {
    const auto gt = w.find('>');
    arcs.emplace_back(index(w.substr(0, gt)), index(w.substr(gt + 1)));
  }
  return arcs;
}

const std::vector<FigurePattern>& table() {
  static const std::vector<FigurePattern> figures = [] {
    std::vector<FigurePattern> out;
    for (const RawFigure& raw : kRaw) {
      FigurePattern p;
      p.name = raw.name;
      p.labels = words(raw.labels);
      p.arcs = parse_arcs(raw.arcs, p.labels);
      p.in_arcs = parse_arcs(raw.in_arcs, p.labels);
      p.out_arcs = parse_arcs(raw.out_arcs, p.labels);
      out.push_back(std::move(p));
    }
    return out;
  }();
  return figures;
}

Vertex branching_root(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs, bool in_side) {
  VertexSet owners;
  for (auto [u, v] : arcs) owners.insert(in_side ? u : v);
  return (VertexSet::all(n) - owners).first();
}

Branching branching_from(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs, bool in_side) {
  Branching b(in_side ? Orientation::In : Orientation::Out, n, branching_root(n, arcs, in_side));
  std::vector<std::pair<Vertex, Vertex>> pending = arcs;
  while (!pending.empty()) {
    const std::size_t before = pending.size();
    std::erase_if(pending, [&](const std::pair<Vertex, Vertex>& a) {
      const Vertex owner = in_side ? a.first : a.second;
      const Vertex other = in_side ? a.second : a.first;
      if (!b.support().contains(other)) return false;
      b.attach(owner, other);
      return true;
    });
    if (pending.size() == before) throw Error(ErrorCode::ConstructionFailed, "drawn arcs do not form a branching");
  }
  return b;
}

}  // namespace

LabeledDigraph FigurePattern::digraph() const { return LabeledDigraph{DiGraph::build(order(), arcs), labels}; }

GoodPair FigurePattern::pair() const {
  return GoodPair{branching_from(order(), in_arcs, true), branching_from(order(), out_arcs, false)};
}

const FigurePattern& figure(std::string_view name) {
  for (const FigurePattern& p : table()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::InvalidParameters, "unknown figure " + std::string(name));
}

std::span<const FigurePattern> all_figures() { return table(); }

std::span<const FigurePattern* const> semicomplete_base_cases() {
  static const std::vector<const FigurePattern*> cases = [] {
    std::vector<const FigurePattern*> out;
    for (const char* name : {"TT4", "D+", "D-", "ST4+ba", "ST4+ad", "ST4+ca", "ST4+bd", "ST4good-b", "ST4good-c",
                             "ST4good-d"}) {
      out.push_back(&figure(name));
    }
    return out;
  }();
  return cases;
}

std::span<const FigurePattern* const> cobipartite_base_cases() {
  static const std::vector<const FigurePattern*> cases = [] {
    std::vector<const FigurePattern*> out;
    for (const char* name : {"6vertex-left", "6vertex-right", "order6-1", "order6-2", "order6-3"}) {
      out.push_back(&figure(name));
    }
    return out;
  }();
  return cases;
}

std::optional<GoodPair> match_figure(const DiGraph& d, const FigurePattern& p, std::optional<Vertex> in_root,
                                     std::optional<Vertex> out_root) {
  const int n = p.order();
  if (d.order() != n || !p.has_pair()) return std::nullopt;
  const GoodPair drawn = p.pair();
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  do {
    if (in_root && perm[drawn.in.root()] != *in_root) continue;
    if (out_root && perm[drawn.out.root()] != *out_root) continue;
    const bool inside = std::all_of(p.arcs.begin(), p.arcs.end(),
                                    [&](const auto& a) { return d.has_arc(perm[a.first], perm[a.second]); });
    if (inside) return drawn.lifted(perm, n);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace branchpair
