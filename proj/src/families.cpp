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

#include "branchpair/families.hpp"

#include <array>
#include <charconv>

#include "branchpair/analysis.hpp"
#include "branchpair/figures.hpp"

namespace branchpair {

namespace {

constexpr std::array<std::pair<FamilyName, std::string_view>, 16> kNames{{
    {FamilyName::ST4, "ST4"},
    {FamilyName::FourException, "FourException"},
    {FamilyName::E4, "E4"},
    {FamilyName::F4, "F4"},
    {FamilyName::TT4, "TT4"},
    {FamilyName::Dplus, "Dplus"},
    {FamilyName::Dminus, "Dminus"},
    {FamilyName::W, "W"},
    {FamilyName::H4, "H4"},
    {FamilyName::WPrimeN, "WPrimeN"},
    {FamilyName::WS, "WS"},
    {FamilyName::StrongNotEnough, "StrongNotEnough"},
    {FamilyName::NoBranchU, "NoBranchU"},
    {FamilyName::BadMulti, "BadMulti"},
    {FamilyName::Fig6Vertex, "Fig6Vertex"},
    {FamilyName::FigOrder6, "FigOrder6"},
}};

// Incremental construction by label.
class Builder {
 public:
  Vertex add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size()) - 1;
  }
  void arc(Vertex u, Vertex v) { arcs_.emplace_back(u, v); }
  /// Copies g with labels prefix+label(v)+suffix; returns the id map.
  std::vector<Vertex> embed(const LabeledDigraph& g, const std::string& suffix) {
    std::vector<Vertex> map(g.graph.order());
    for (Vertex v = 0; v < g.graph.order(); ++v) map[v] = add(g.name(v) + suffix);
    for (const Arc& a : g.graph.arcs()) arc(map[a.tail], map[a.head]);
    return map;
  }
  int size() const { return static_cast<int>(labels_.size()); }
  LabeledDigraph finish(bool multi = false) const {
    return LabeledDigraph{DiGraph::build(size(), arcs_, multi), labels_};
  }

 private:
  std::vector<std::string> labels_;
  ArcList arcs_;
};

LabeledDigraph unlabeled(const DiGraph& g, const std::string& prefix) {
  LabeledDigraph out{g, {}};
  for (Vertex v = 0; v < g.order(); ++v) out.labels.push_back(prefix + std::to_string(v + 1));
  return out;
}

LabeledDigraph make_w() {
  Builder b;
  for (const char* name : {"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"}) b.add(name);
  const LabeledDigraph names{DiGraph::build(8, {}), {"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"}};
  auto id = [&](std::string_view s) { return names.vertex(s); };
  const std::array<std::pair<const char*, const char*>, 18> arcs{{
      {"a1", "b1"}, {"b1", "c1"}, {"c1", "d1"}, {"d1", "a1"}, {"a1", "c1"}, {"c1", "a1"}, {"d1", "b1"},
      {"a2", "d2"}, {"d2", "c2"}, {"c2", "b2"}, {"b2", "a2"}, {"a2", "c2"}, {"c2", "a2"}, {"b2", "d2"},
      {"d1", "d2"}, {"d2", "b1"}, {"b1", "b2"}, {"b2", "d1"},
  }};
  for (auto [u, v] : arcs) b.arc(id(u), id(v));
  return b.finish();
}

LabeledDigraph make_h4() {
  Builder b;
  std::array<Vertex, 5> a{};
  std::array<Vertex, 5> c{};
  for (int i = 0; i < 5; ++i) a[i] = b.add("a" + std::to_string(i + 1));
  for (int i = 0; i < 5; ++i) c[i] = b.add("b" + std::to_string(i + 1));
  for (int i = 0; i < 5; ++i) {
    b.arc(a[i], a[(i + 1) % 5]);
    b.arc(c[(i + 1) % 5], c[i]);
    b.arc(a[i], c[i]);
    b.arc(c[i], a[i]);
  }
  return b.finish();
}

LabeledDigraph make_bad_multi() {
  Builder b;
  const Vertex s = b.add("s"), a = b.add("a"), bb = b.add("b"), c = b.add("c"), d = b.add("d"), e = b.add("e");
  for (auto [u, v] : {std::pair{a, bb}, {a, c}, {bb, c}, {c, d}, {c, e}, {d, e}, {s, a}, {s, a}, {e, s}, {e, s},
                      {bb, d}, {d, bb}}) {
    b.arc(u, v);
  }
  return b.finish(true);
}

DiGraph default_s(int m) {
  if (m == 1) return DiGraph::build(1, {});
  if (m == 2) return DiGraph::build(2, {{0, 1}, {1, 0}});
  return near_transitive_tournament(m);
}

void require(bool ok, const std::string& why) {
  if (!ok) throw Error(ErrorCode::InvalidParameters, why);
}

void require_strong_semicomplete(const DiGraph& g, const char* what) {
  require(g.order() >= 1 && is_semicomplete(g) && is_strong(g), std::string(what) + " must be strong semicomplete");
}

FamilyInstance from_figure(std::string_view name) {
  const FigurePattern& p = figure(name);
  FamilyInstance inst{p.digraph(), std::nullopt, std::nullopt};
  if (p.has_pair()) inst.drawn_pair = p.pair();
  return inst;
}

LabeledDigraph make_w_prime(const FamilySpec& spec) {
  require(spec.n >= 9, "WPrimeN needs n >= 9");
  const DiGraph s = spec.s.value_or(default_s(spec.n - 8));
  require(s.order() == spec.n - 8, "WPrimeN: S must have n - 8 vertices");
  require_strong_semicomplete(s, "S");
  Builder b;
  const LabeledDigraph w = make_w();
  const auto wm = b.embed(w, "");
  const auto sm = b.embed(unlabeled(s, "s"), "");
  for (Vertex v : sm) {
    b.arc(v, wm[w.vertex("c2")]);
    b.arc(wm[w.vertex("c1")], v);
  }
  return b.finish();
}

LabeledDigraph make_ws(const FamilySpec& spec) {
  const DiGraph s = spec.s.value_or(default_s(2));
  require_strong_semicomplete(s, "S");
  Builder b;
  const LabeledDigraph w = make_w();
  std::array<std::vector<Vertex>, 3> copies;
  for (int i = 0; i < 3; ++i) copies[i] = b.embed(w, "/" + std::to_string(i + 1));
  const auto sm = b.embed(unlabeled(s, "s"), "");
  for (const auto& wm : copies) {
    for (Vertex v : sm) {
      b.arc(v, wm[w.vertex("c2")]);
      b.arc(wm[w.vertex("c1")], v);
    }
  }
  return b.finish();
}

LabeledDigraph make_strong_not_enough(const FamilySpec& spec) {
  require(spec.k >= 1, "StrongNotEnough needs k >= 1");
  const DiGraph t1 = spec.t1.value_or(rotational_tournament(spec.k));
  const DiGraph t2 = spec.t2.value_or(rotational_tournament(spec.k));
  for (const DiGraph* t : {&t1, &t2}) {
    require(is_tournament(*t) && is_strong(*t) && min_semidegree(*t) >= spec.k,
            "T1, T2 must be strong tournaments with minimum semidegree >= k");
  }
  Builder b;
  std::array<Vertex, 2> centre{};
  for (int copy = 0; copy < 2; ++copy) {
    const std::string suffix = copy == 0 ? "'" : "''";
    const Vertex v = b.add("v" + suffix);
    const auto p = b.embed(unlabeled(t1, "p"), suffix);
    const auto q = b.embed(unlabeled(t2, "q"), suffix);
    for (Vertex x : p) b.arc(v, x);
    for (Vertex y : q) b.arc(y, v);
    // All arcs from T2 to T1, except that p1 -> q1 replaces q1 -> p1.
    for (Vertex y : q) {
      for (Vertex x : p) {
        if (x == p[0] && y == q[0]) {
          b.arc(x, y);
        } else {
          b.arc(y, x);
        }
      }
    }
    centre[copy] = v;
  }
  b.arc(centre[0], centre[1]);
  b.arc(centre[1], centre[0]);
  return b.finish();
}

FamilyInstance make_no_branch_u(const FamilySpec& spec) {
  require(spec.r >= 1, "NoBranchU needs R >= 1");
  const LabeledDigraph h = spec.host.value_or(make_w());
  const Vertex s = h.vertex(spec.host_s);
  const Vertex t = h.vertex(spec.host_t);
  Builder b;
  const Vertex x = b.add(s == t ? h.name(s) : "x1");
  for (int copy = 1; copy <= 3; ++copy) {
    const std::string suffix = "/" + std::to_string(copy);
    std::vector<Vertex> hm(h.graph.order());
    for (Vertex v = 0; v < h.graph.order(); ++v) hm[v] = (s == t && v == s) ? x : b.add(h.name(v) + suffix);
    for (const Arc& a : h.graph.arcs()) b.arc(hm[a.tail], hm[a.head]);
    if (s == t) continue;
    std::vector<Vertex> xs{x};
    for (int i = 2; i <= spec.r; ++i) xs.push_back(b.add("x" + std::to_string(i) + suffix));
    for (Vertex u : xs) {
      for (Vertex w : xs) {
        if (u != w) b.arc(u, w);
      }
      b.arc(u, hm[s]);
      b.arc(hm[t], u);
    }
  }
  return FamilyInstance{b.finish(), std::nullopt, x};
}

}  // namespace

DiGraph rotational_tournament(int k) {
  require(k >= 1, "rotational tournament needs k >= 1");
  const int m = 2 * k + 1;
  ArcList arcs;
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= k; ++j) arcs.emplace_back(i, (i + j) % m);
  }
  return DiGraph::build(m, arcs);
}

DiGraph near_transitive_tournament(int m) {
  require(m >= 1, "tournament needs a vertex");
  ArcList arcs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (i == 0 && j == m - 1 && m >= 3) {
        arcs.emplace_back(j, i);
      } else {
        arcs.emplace_back(i, j);
      }
    }
  }
  return DiGraph::build(m, arcs);
}

FamilyInstance generate(const FamilySpec& spec) {
  switch (spec.name) {
    case FamilyName::ST4: return from_figure("ST4");
    case FamilyName::FourException: {
      require(spec.variant >= 0 && spec.variant <= 3, "FourException variant in 0..3");
      FamilyInstance inst = from_figure("ST4");
      DiGraph g = inst.digraph.graph;
      if (spec.variant & 1) g = add_arc(g, 3, 2);
      if (spec.variant & 2) g = add_arc(g, 2, 1);
      inst.digraph.graph = g;
      return inst;
    }
    case FamilyName::E4: return from_figure("E4");
    case FamilyName::F4: return from_figure("F4");
    case FamilyName::TT4: return from_figure("TT4");
    case FamilyName::Dplus: return from_figure("D+");
    case FamilyName::Dminus: return from_figure("D-");
    case FamilyName::W: return FamilyInstance{make_w(), std::nullopt, std::nullopt};
    case FamilyName::H4: return FamilyInstance{make_h4(), std::nullopt, std::nullopt};
    case FamilyName::WPrimeN: return FamilyInstance{make_w_prime(spec), std::nullopt, std::nullopt};
    case FamilyName::WS: return FamilyInstance{make_ws(spec), std::nullopt, std::nullopt};
    case FamilyName::StrongNotEnough: return FamilyInstance{make_strong_not_enough(spec), std::nullopt, std::nullopt};
    case FamilyName::NoBranchU: return make_no_branch_u(spec);
    case FamilyName::BadMulti: return FamilyInstance{make_bad_multi(), std::nullopt, std::nullopt};
    case FamilyName::Fig6Vertex:
      require(spec.variant == 0 || spec.variant == 1, "Fig6Vertex variant 0 (left) or 1 (right)");
      return from_figure(spec.variant == 0 ? "6vertex-left" : "6vertex-right");
    case FamilyName::FigOrder6:
      require(spec.variant >= 1 && spec.variant <= 3, "FigOrder6 variant in 1..3");
      return from_figure("order6-" + std::to_string(spec.variant));
  }
  throw Error(ErrorCode::InvalidParameters, "unknown family");
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  std::optional<int> param;
  if (colon != std::string_view::npos) {
    int value = 0;
    const std::string_view tail = text.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
    require(ec == std::errc() && ptr == tail.data() + tail.size(), "bad family parameter in " + std::string(text));
    param = value;
  }
  for (auto [name, label] : kNames) {
    if (label != head) continue;
    FamilySpec spec;
    spec.name = name;
    switch (name) {
      case FamilyName::WPrimeN: spec.n = param.value_or(9); break;
      case FamilyName::StrongNotEnough: spec.k = param.value_or(1); break;
      case FamilyName::NoBranchU: spec.r = param.value_or(2); break;
      case FamilyName::FigOrder6: spec.variant = param.value_or(1); break;
      default: spec.variant = param.value_or(0); break;
    }
    return spec;
  }
  throw Error(ErrorCode::InvalidParameters, "unknown family " + std::string(text));
}

std::string family_label(const FamilySpec& spec) {
  std::string label;
  for (auto [name, text] : kNames) {
    if (name == spec.name) label = text;
  }
  switch (spec.name) {
    case FamilyName::WPrimeN: return label + ":" + std::to_string(spec.n);
    case FamilyName::StrongNotEnough: return label + ":" + std::to_string(spec.k);
    case FamilyName::NoBranchU: return label + ":" + std::to_string(spec.r);
    case FamilyName::FourException:
    case FamilyName::Fig6Vertex:
    case FamilyName::FigOrder6: return label + ":" + std::to_string(spec.variant);
    default: return label;
  }
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (auto [name, label] : kNames) out.emplace_back(label);
  return out;
}

bool SanityReport::ok() const {
  for (const SanityCheck& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

SanityReport sanity(const FamilySpec& spec) {
  const FamilyInstance inst = generate(spec);
  const DiGraph& g = inst.digraph.graph;
  SanityReport report{family_label(spec), {}};
  auto lambda = [&](int claimed) { report.checks.push_back({"lambda", claimed, arc_connectivity(g), false}); };
  auto alpha = [&](int claimed) {
    report.checks.push_back({"alpha", claimed, independence_number(g).size, false});
  };
  auto flag = [&](const char* what, bool claimed, bool computed) {
    report.checks.push_back({what, claimed ? 1 : 0, computed ? 1 : 0, false});
  };
  switch (spec.name) {
    case FamilyName::ST4: flag("tournament", true, is_tournament(g)); flag("strong", true, is_strong(g)); break;
    case FamilyName::FourException: flag("semicomplete", true, is_semicomplete(g)); break;
    case FamilyName::E4: report.checks.push_back({"delta0", 1, min_semidegree(g), false}); break;
    case FamilyName::F4: report.checks.push_back({"delta0", 1, min_semidegree(g), false}); break;
    case FamilyName::TT4:
    case FamilyName::Dplus:
    case FamilyName::Dminus: flag("semicomplete", true, is_semicomplete(g)); flag("strong", false, is_strong(g)); break;
    case FamilyName::W: lambda(2); alpha(2); break;
    case FamilyName::H4: lambda(2); alpha(4); break;
    case FamilyName::WPrimeN: lambda(2); alpha(3); break;
    case FamilyName::WS: lambda(2); alpha(7); break;
    case FamilyName::StrongNotEnough:
      flag("strong", true, is_strong(g));
      flag("cobipartite", true, co_bipartition(g).has_value());
      report.checks.push_back({"delta0", spec.k, min_semidegree(g), true});
      break;
    case FamilyName::NoBranchU: lambda(spec.r); break;
    case FamilyName::BadMulti: lambda(2); alpha(2); break;
    case FamilyName::Fig6Vertex:
    case FamilyName::FigOrder6: flag("cobipartite", true, co_bipartition(g).has_value()); break;
  }
  return report;
}

}  // namespace branchpair
