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

#include "branchpair/solvers.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <ostream>
#include <sstream>

#include "branchpair/analysis.hpp"
#include "branchpair/figures.hpp"

namespace branchpair {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::NonStrongSemicomplete: return "non-strong-semicomplete";
    case Strategy::ExceptionTheorem: return "exception-theorem";
    case Strategy::UtilExtension: return "util-extension";
    case Strategy::ExtendLemma: return "extend-lemma";
    case Strategy::SmallLookup: return "small-lookup";
    case Strategy::CoBipartiteCase1: return "cobipartite-case1";
    case Strategy::CoBipartiteCase2: return "cobipartite-case2";
    case Strategy::CoBipartiteCase3: return "cobipartite-case3";
    case Strategy::Alpha2Pipeline: return "alpha2-pipeline";
    case Strategy::OracleFallback: return "oracle-fallback";
  }
  return "unknown";
}

void write_report(std::ostream& out, const SolveReport& r, const LabeledDigraph* names) {
  out << "STRATEGY " << to_string(r.strategy) << " stage=" << r.stage;
  if (!r.detail.empty()) out << " detail=" << r.detail;
  out << '\n';
  Certificate c;
  c.kind = r.pair ? CertificateKind::PairFound : CertificateKind::ExhaustedSearch;
  c.pair = r.pair;
  c.stats = r.stats;
  write_transcript(out, c, names);
  out << "VALID " << (r.validated ? "yes" : "no") << '\n';
}

std::string report_text(const SolveReport& r, const LabeledDigraph* names) {
  std::ostringstream out;
  write_report(out, r, names);
  return out.str();
}

namespace {

void require(bool ok, const std::string& why) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, why);
}

GoodPair checked(const DiGraph& d, GoodPair p, VertexSet span, const char* where) {
  if (Validation v = validate_good_pair_on(d, span, p); !v) {
    throw Error(ErrorCode::ConstructionFailed, std::string(where) + " built an invalid pair: " + v.reason);
  }
  return p;
}

GoodPair checked(const DiGraph& d, GoodPair p, const char* where) { return checked(d, std::move(p), d.vertices(), where); }

VertexSet out_nbrs_in(const DiGraph& d, Vertex v, VertexSet s) { return d.out_neighbors(v) & s; }
VertexSet in_nbrs_in(const DiGraph& d, Vertex v, VertexSet s) { return d.in_neighbors(v) & s; }

using ArcFilter = std::function<bool(Vertex, Vertex)>;

// Breadth-first branching on `span` rooted at `root` using arcs accepted by
// `usable`; lowest vertices first. Absent if it cannot span.
std::optional<Branching> grow_branching(const DiGraph& d, VertexSet span, Vertex root, Orientation o,
                                        const ArcFilter& usable = {}) {
  Branching b(o, d.order(), root);
  std::vector<Vertex> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    const VertexSet next = (o == Orientation::Out ? d.out_neighbors(x) : d.in_neighbors(x)) & span;
    for (Vertex w : next - b.support()) {
      const bool ok = !usable || (o == Orientation::Out ? usable(x, w) : usable(w, x));
      if (!ok) continue;
      b.attach(w, x);
      queue.push_back(w);
    }
  }
  if (b.support() != span) return std::nullopt;
  return b;
}

// Adds the vertices of `part` to `host`, keeping part's links; part's root
// must already be in host.
void graft(Branching& host, const Branching& part) {
  std::vector<Vertex> queue{part.root()};
  VertexSet done = VertexSet::single(part.root());
  while (done != part.support()) {
    bool progress = false;
    for (Vertex v : part.support() - done) {
      if (done.contains(part.link(v))) {
        host.attach(v, part.link(v));
        done.insert(v);
        progress = true;
      }
    }
    if (!progress) throw Error(ErrorCode::ConstructionFailed, "graft: part is not a branching");
  }
}

GoodPair lift(const InducedSubgraph& sub, const GoodPair& p, int n) { return p.lifted(sub.to_parent, n); }

bool is_semicomplete_on(const DiGraph& d, VertexSet s) {
  for (Vertex v : s) {
    if (((d.neighbors(v) | VertexSet::single(v)) & s) != s) return false;
  }
  return true;
}

int arcs_within(const DiGraph& d, VertexSet s) {
  int count = 0;
  for (Vertex v : s) count += (d.out_neighbors(v) & s).size();
  return count;
}

// All k-subsets of 0..n-1 in lexicographic order.
void for_each_subset(int n, int k, const std::function<bool(VertexSet)>& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(i);
    if (!visit(s)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Good r-pair of a semicomplete 4-vertex digraph from the drawn base cases.
std::optional<GoodPair> base_case_4(const DiGraph& d4, Vertex r) {
  for (const FigurePattern* p : semicomplete_base_cases()) {
    if (auto pair = match_figure(d4, *p, r)) return pair;
  }
  return std::nullopt;
}

}  // namespace

GoodPair semicomplete_nonstrong_pair(const DiGraph& d, Vertex r, Vertex q) {
  const int n = d.order();
  require(n >= 4, "needs order >= 4");
  require(is_semicomplete(d), "needs a semicomplete digraph");
  require(!is_strong(d), "needs a non-strong digraph");
  const VertexSet out_gen = out_generators(d);
  const VertexSet in_gen = in_generators(d);
  require(in_gen.contains(r) && out_gen.contains(q), "r must be in In(D) and q in Out(D)");

  if (out_gen.size() >= 2) {
    const InducedSubgraph w1 = induced(d, out_gen);
    std::vector<Vertex> cycle = hamiltonian_cycle_through(w1.graph, w1.from_parent[q]);
    cycle.pop_back();
    for (Vertex& v : cycle) v = w1.to_parent[v];
    const Vertex ua = cycle.back();
    auto in = grow_branching(d, d.vertices() - out_gen, r, Orientation::In);
    require(in.has_value(), "no in-branching of D - Out(D)");
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) in->attach(cycle[i], r);
    in->attach(ua, cycle.front());
    Branching out = Branching::from_path(Orientation::Out, n, cycle);
    for (Vertex z : d.vertices() - out_gen) out.attach(z, ua);
    return checked(d, GoodPair{*in, out}, "non-strong lemma (cycle case)");
  }
  if (in_gen.size() >= 2) {
    return checked(d, semicomplete_nonstrong_pair(reverse(d), q, r).reversed(), "non-strong lemma (reversed)");
  }
  // In(D) = {r}, Out(D) = {q}: an arc uv avoiding both.
  const VertexSet rest = d.vertices() - VertexSet{q, r};
  for (Vertex u : rest) {
    for (Vertex v : out_nbrs_in(d, u, rest)) {
      Branching in(Orientation::In, n, r);
      in.attach(v, r);
      in.attach(u, r);
      in.attach(q, v);
      Branching out(Orientation::Out, n, q);
      out.attach(u, q);
      out.attach(v, u);
      out.attach(r, q);
      for (Vertex z : rest - VertexSet{u, v}) {
        in.attach(z, r);
        out.attach(z, q);
      }
      return checked(d, GoodPair{in, out}, "non-strong lemma (single generators)");
    }
  }
  throw Error(ErrorCode::PreconditionViolated, "no arc outside {q, r}");
}

GoodPair semicomplete_util_extend(const DiGraph& d, Vertex r, VertexSet s, const GoodPair& sub) {
  require(is_semicomplete(d), "needs a semicomplete digraph");
  require(in_generators(d).contains(r), "r must be in In(D)");
  require(s.size() >= 2, "sub-pair needs order >= 2");
  require(sub.in.root() == r, "sub-pair must be rooted at r");
  require(static_cast<bool>(validate_good_pair_on(d, s, sub)), "sub-pair is not a good pair of D<S>");
  GoodPair p = sub;
  while (s != d.vertices()) {
    std::optional<Vertex> next;
    for (Vertex y : d.vertices() - s) {
      if (!out_nbrs_in(d, y, s).empty()) {
        next = y;
        break;
      }
    }
    require(next.has_value(), "no outside vertex dominates the sub-digraph");
    const Vertex y = *next;
    if (out_nbrs_in(d, y, s) == s) {
      const Vertex root = p.out.root();
      p.in.attach(y, (s - VertexSet::single(root)).first());
      p.out.grow_root(y);
    } else {
      p.in.attach(y, out_nbrs_in(d, y, s).first());
      p.out.attach(y, in_nbrs_in(d, y, s).first());
    }
    s.insert(y);
  }
  return checked(d, p, "util lemma");
}

Certificate semicomplete_good_r_pair(const DiGraph& d, Vertex r) {
  d.check_vertex(r);
  require(d.order() >= 4, "needs order >= 4");
  require(is_semicomplete(d), "needs a semicomplete digraph");
  require(in_generators(d).contains(r), "r must be in In(D)");
  Certificate cert;
  cert.root_in = r;
  if (auto exc = is_exception(d, r)) {
    cert.kind = CertificateKind::Exception;
    cert.exception = exc;
    cert.route = "exception: in-arcs y>r and z>y forced; r and y become sources";
    return cert;
  }
  cert.kind = CertificateKind::PairFound;
  if (!is_strong(d)) {
    cert.pair = semicomplete_nonstrong_pair(d, r, out_generators(d).first());
    cert.route = "non-strong";
    return cert;
  }
  const std::vector<Vertex> c3 = hamiltonian_cycle_through(d, r, 3);
  const Vertex z = c3[1];
  const Vertex y = c3[2];
  for (Vertex t : d.vertices() - VertexSet{z, y, r}) {
    const VertexSet s{z, y, r, t};
    const InducedSubgraph sub = induced(d, s);
    const Vertex rs = sub.from_parent[r];
    if (!in_generators(sub.graph).contains(rs) || is_4_exception(sub.graph, rs)) continue;
    std::optional<GoodPair> base = base_case_4(sub.graph, rs);
    std::string how = "3-cycle+t=" + std::to_string(t) + "+base-table";
    if (!base) {
      const Certificate small = oracle_good_pair(sub.graph, rs);
      if (!small.found()) continue;
      base = small.pair;
      how = "3-cycle+t=" + std::to_string(t) + "+oracle4";
    }
    cert.pair = semicomplete_util_extend(d, r, s, lift(sub, *base, d.order()));
    cert.route = how + "+util";
    return cert;
  }
  // Every t is dominated by r and y.
  if (d.has_arc(r, y)) {
    const DiGraph reduced = remove_arc(d, y, r);
    cert.pair = checked(d, semicomplete_nonstrong_pair(reduced, r, out_generators(reduced).first()), "endgame");
    cert.route = "endgame r>y";
    return cert;
  }
  throw Error(ErrorCode::ConstructionFailed, "non-exception without a construction");
}

GoodPair semicomplete_good_pair(const DiGraph& d) {
  require(d.order() >= 4, "needs order >= 4");
  require(is_semicomplete(d), "needs a semicomplete digraph");
  if (!is_strong(d)) {
    return semicomplete_nonstrong_pair(d, in_generators(d).first(), out_generators(d).first());
  }
  for (Vertex v : d.vertices()) {
    if (d.in_neighbors(v).size() >= 2) return *semicomplete_good_r_pair(d, v).pair;
  }
  throw Error(ErrorCode::ConstructionFailed, "no vertex of in-degree 2");
}

GoodPair extend_by_buffer(const DiGraph& d, VertexSet x, const GoodPair& sub) {
  const VertexSet rest = d.vertices() - x;
  require(!rest.empty(), "D - X is empty");
  require(static_cast<bool>(validate_good_pair_on(d, rest, sub)), "sub-pair is not a good pair of D - X");
  GoodPair p = sub;
  for (Vertex v : x) {
    const VertexSet outs = out_nbrs_in(d, v, rest);
    const VertexSet ins = in_nbrs_in(d, v, rest);
    require(!outs.empty() && !ins.empty(),
            "vertex " + std::to_string(v) + " needs an in- and an out-neighbour outside X");
    p.in.attach(v, outs.first());
    p.out.attach(v, ins.first());
  }
  return checked(d, p, "extend lemma");
}

namespace {

// A 2-cycle a<>b with b > c: P = (a, b, c) is both branchings, and the
// other arcs hold a second one.
std::optional<GoodPair> path_split(const DiGraph& d) {
  std::array<Vertex, 3> perm{0, 1, 2};
  do {
    const auto [a, b, c] = perm;
    if (!(d.has_arc(a, b) && d.has_arc(b, a) && d.has_arc(b, c))) continue;
    const std::array<Vertex, 3> path{a, b, c};
    const Branching p_in = Branching::from_path(Orientation::In, 3, path);
    const Branching p_out = Branching::from_path(Orientation::Out, 3, path);
    // The remaining arcs contain a spanning path or star through b > a.
    std::vector<Arc> rest;
    for (const Arc& arc : d.arcs()) {
      if (!((arc.tail == a && arc.head == b) || (arc.tail == b && arc.head == c))) rest.push_back(arc);
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        const DiGraph q = DiGraph::build(3, {{rest[i].tail, rest[i].head}, {rest[j].tail, rest[j].head}});
        for (Vertex root = 0; root < 3; ++root) {
          if (auto out = grow_branching(q, q.vertices(), root, Orientation::Out)) {
            return GoodPair{p_in, *out};
          }
          if (auto in = grow_branching(q, q.vertices(), root, Orientation::In)) {
            return GoodPair{*in, p_out};
          }
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

GoodPair three_vertex_pair(const DiGraph& d) {
  require(d.order() == 3 && d.arc_count() >= 4, "needs 3 vertices and at least 4 arcs");
  if (auto p = path_split(d)) return checked(d, *p, "three-vertex split");
  // Otherwise c > b, which is the same case in the reverse.
  if (auto p = path_split(reverse(d))) return checked(d, p->reversed(), "three-vertex split (reversed)");
  throw Error(ErrorCode::ConstructionFailed, "three-vertex split failed");
}

GoodPair lemma_3good(const DiGraph& d, VertexSet x, const GoodPair& sub) {
  require(static_cast<bool>(validate_good_pair_on(d, x, sub)), "sub-pair is not a good pair of D<X>");
  require((d.vertices() - x).size() <= 3, "at most three vertices outside X");
  GoodPair p = sub;
  while (x != d.vertices()) {
    std::optional<Vertex> absorbable;
    for (Vertex v : d.vertices() - x) {
      if (!in_nbrs_in(d, v, x).empty() && !out_nbrs_in(d, v, x).empty()) {
        absorbable = v;
        break;
      }
    }
    if (absorbable) {
      const InducedSubgraph grown = induced(d, x | VertexSet::single(*absorbable));
      const GoodPair inner = extend_by_buffer(grown.graph, VertexSet::single(grown.from_parent[*absorbable]),
                                              GoodPair{p.in.lifted(grown.from_parent, grown.graph.order()),
                                                       p.out.lifted(grown.from_parent, grown.graph.order())});
      p = lift(grown, inner, d.order());
      x.insert(*absorbable);
      continue;
    }
    const VertexSet rest = d.vertices() - x;
    require(rest.size() == 3, "an outside vertex lacks an in- or out-neighbour in X");
    std::array<Vertex, 3> perm{};
    std::copy(rest.begin(), rest.end(), perm.begin());
    bool done = false;
    do {
      const auto [a, b, c] = perm;
      const VertexSet a_in = in_nbrs_in(d, a, x);
      const VertexSet c_out = out_nbrs_in(d, c, x);
      if (a_in.empty() || c_out.empty() || !d.has_arc(a, b) || !d.has_arc(a, c) || !d.has_arc(b, c)) continue;
      const VertexSet b_in = in_nbrs_in(d, b, x);
      if (b_in.empty() && !d.has_arc(c, b)) continue;
      p.out.attach(a, a_in.first());
      p.out.attach(c, a);
      if (b_in.empty()) {
        p.out.attach(b, c);
      } else {
        p.out.attach(b, b_in.first());
      }
      p.in.attach(c, c_out.first());
      p.in.attach(b, c);
      p.in.attach(a, b);
      x = d.vertices();
      done = true;
    } while (!done && std::next_permutation(perm.begin(), perm.end()));
    require(done, "no labelling of the three outside vertices fits");
  }
  return checked(d, p, "3good lemma");
}

namespace {

struct Attempt {
  GoodPair pair;
  std::string route;
};

// Pair of the 2-cycle {u, v}.
GoodPair two_cycle_pair(int n, Vertex u, Vertex v) {
  Branching in(Orientation::In, n, v);
  in.attach(u, v);
  Branching out(Orientation::Out, n, v);
  out.attach(u, v);
  return GoodPair{in, out};
}

// Good pair of d<s> in d's ids for the small seed shapes: 2-cycles, 3-sets
// with >= 4 arcs, semicomplete sets of order >= 4.
std::optional<GoodPair> seed_pair(const DiGraph& d, VertexSet s) {
  const InducedSubgraph sub = induced(d, s);
  const DiGraph& g = sub.graph;
  if (s.size() == 2 && g.arc_count() == 2) return lift(sub, two_cycle_pair(2, 0, 1), d.order());
  if (s.size() == 3 && g.arc_count() >= 4) return lift(sub, three_vertex_pair(g), d.order());
  if (s.size() >= 4 && is_semicomplete(g)) return lift(sub, semicomplete_good_pair(g), d.order());
  return std::nullopt;
}

// Seed of order k inside d plus Lemma extend on the rest.
std::optional<Attempt> seed_and_extend(const DiGraph& d, int k, const char* name) {
  std::optional<Attempt> found;
  for_each_subset(d.order(), k, [&](VertexSet s) {
    auto seed = seed_pair(d, s);
    if (!seed) return true;
    try {
      found = Attempt{extend_by_buffer(d, d.vertices() - s, *seed), std::string(name) + "+extend"};
      return false;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionViolated) throw;
      return true;
    }
  });
  return found;
}

std::optional<Attempt> seed_and_3good(const DiGraph& d, int k, const char* name) {
  if (d.order() - k > 3 || !is_k_arc_strong(d, 2)) return std::nullopt;
  std::optional<Attempt> found;
  for_each_subset(d.order(), k, [&](VertexSet s) {
    auto seed = seed_pair(d, s);
    if (!seed) return true;
    try {
      found = Attempt{lemma_3good(d, s, *seed), std::string(name) + "+3good"};
      return false;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionViolated) throw;
      return true;
    }
  });
  return found;
}

bool is_e4(const DiGraph& d) {
  if (d.order() != 4 || d.arc_count() != 6) return false;
  const FigurePattern& e4 = figure("E4");
  std::array<Vertex, 4> perm{0, 1, 2, 3};
  do {
    if (std::all_of(e4.arcs.begin(), e4.arcs.end(),
                    [&](const auto& a) { return d.has_arc(perm[a.first], perm[a.second]); })) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<Attempt> small_constructive(const DiGraph& d) {
  const int n = d.order();
  if (n == 3 && d.arc_count() >= 4) return Attempt{three_vertex_pair(d), "three-vertex split"};
  if (n >= 4 && is_semicomplete(d)) return Attempt{semicomplete_good_pair(d), "semicomplete corollary"};
  if (n == 4) {
    if (auto pair = match_figure(d, figure("F4"))) return Attempt{checked(d, *pair, "F4 table"), "F4 table"};
  }
  for (int k = std::min(n - 1, 4); k >= 2; --k) {
    if (auto a = seed_and_extend(d, k, k == 2 ? "2-cycle" : k == 3 ? "3-set" : "4-clique")) return a;
  }
  if (n == 6) {
    if (auto a = seed_and_3good(d, 3, "3-set")) return a;
  }
  return std::nullopt;
}

}  // namespace

Certificate small_good_pair(const DiGraph& d, const OracleBudget& budget) {
  require(d.order() >= 1 && d.order() <= 6, "small solver handles 1..6 vertices");
  if (d.order() == 4 && is_e4(d)) {
    Certificate c = oracle_good_pair(d, std::nullopt, std::nullopt, budget);
    c.route = "E4 (oracle-certified)";
    return c;
  }
  if (!d.is_multi()) {
    if (auto a = small_constructive(d)) {
      Certificate c;
      c.kind = CertificateKind::PairFound;
      c.pair = a->pair;
      c.route = a->route;
      return c;
    }
  }
  return oracle_good_pair(d, std::nullopt, std::nullopt, budget);
}

namespace {

// Exception branch of the first co-bipartite case: side V1 with (D1, a1) an
// exception, a1 > a2 into V2, V2 semicomplete of order >= 4.
GoodPair cobipartite_exception_branch(const DiGraph& d, VertexSet v1, VertexSet v2, Vertex a1, Vertex a2) {
  const int n = d.order();
  const InducedSubgraph d2 = induced(d, v2);
  const GoodPair p2 = lift(d2, semicomplete_good_pair(d2.graph), n);
  const Vertex y1 = in_nbrs_in(d, a1, v1).first();
  const VertexSet a1_from_v2 = in_nbrs_in(d, a1, v2);
  const VertexSet y1_from_v2 = in_nbrs_in(d, y1, v2);
  if (a1_from_v2.empty() || y1_from_v2.empty()) {
    throw Error(ErrorCode::ConstructionFailed, "exception branch needs in-neighbours in V2");
  }
  auto i1 = grow_branching(d, v1, a1, Orientation::In);
  if (!i1) throw Error(ErrorCode::ConstructionFailed, "a1 is not an in-generator of D1");
  GoodPair p = p2;
  p.in.attach(a1, a2);
  graft(p.in, *i1);
  p.out.attach(a1, a1_from_v2.first());
  p.out.attach(y1, y1_from_v2.first());
  for (Vertex v : v1 - VertexSet{a1, y1}) p.out.attach(v, a1);
  return checked(d, p, "co-bipartite case 1 (exception)");
}

GoodPair cobipartite_case1(const DiGraph& d, VertexSet v1, VertexSet v2) {
  const int n = d.order();
  const InducedSubgraph d1 = induced(d, v1);
  const VertexSet in1 = d1.lift(in_generators(d1.graph));
  std::optional<std::pair<Vertex, Vertex>> a;
  for (Vertex u : in1) {
    const VertexSet outs = out_nbrs_in(d, u, v2);
    if (!outs.empty()) {
      a = std::pair{u, outs.first()};
      break;
    }
  }
  if (!a) throw Error(ErrorCode::ConstructionFailed, "no arc from In(D1) to V2");
  const auto [a1, a2] = *a;
  if (is_exception(d1.graph, d1.from_parent[a1])) return cobipartite_exception_branch(d, v1, v2, a1, a2);

  const GoodPair p1 = lift(d1, *semicomplete_good_r_pair(d1.graph, d1.from_parent[a1]).pair, n);
  const InducedSubgraph d2 = induced(d, v2);
  const VertexSet out2 = d2.lift(out_generators(d2.graph));
  std::optional<std::pair<Vertex, Vertex>> b;
  for (Vertex u : v1) {
    for (Vertex w : out_nbrs_in(d, u, out2)) {
      if (u == a1 && w == a2) continue;
      b = std::pair{u, w};
      break;
    }
    if (b) break;
  }
  if (!b) throw Error(ErrorCode::ConstructionFailed, "no second arc from V1 to Out(D2)");
  const auto [b1, b2] = *b;
  const DiGraph rev = reverse(d);
  const DiGraph rev2 = reverse(d2.graph);
  if (is_exception(rev2, d2.from_parent[b2])) {
    return checked(d, cobipartite_exception_branch(rev, v2, v1, b2, b1).reversed(), "co-bipartite case 1 (reversed)");
  }
  // Good b2-pair of the reversed side, read back as a pair of D2 whose
  // out-branching is rooted at b2.
  const GoodPair p2 = lift(d2, semicomplete_good_r_pair(rev2, d2.from_parent[b2]).pair->reversed(), n);
  GoodPair p{p2.in, p1.out};
  p.in.attach(a1, a2);
  graft(p.in, p1.in);
  p.out.attach(b2, b1);
  graft(p.out, p2.out);
  return checked(d, p, "co-bipartite case 1");
}

// Both sides directed 3-cycles and the remaining arcs a directed 6-cycle C:
// (C - a, P1 + a + P2).
std::optional<GoodPair> six_cycle_pair(const DiGraph& d, VertexSet v1, VertexSet v2) {
  if (d.order() != 6 || arcs_within(d, v1) != 3 || arcs_within(d, v2) != 3 || d.arc_count() != 12) {
    return std::nullopt;
  }
  std::vector<std::pair<Vertex, Vertex>> cross;
  for (const Arc& arc : d.arcs()) {
    if (v1.contains(arc.tail) != v1.contains(arc.head)) cross.emplace_back(arc.tail, arc.head);
  }
  const DiGraph c = DiGraph::build(6, cross);
  for (Vertex v = 0; v < 6; ++v) {
    if (c.out_neighbors(v).size() != 1 || c.in_neighbors(v).size() != 1) return std::nullopt;
  }
  if (!is_strong(c)) return std::nullopt;
  auto succ = [&](Vertex v) { return (d.out_neighbors(v) & (v1.contains(v) ? v1 : v2)).first(); };
  for (Vertex u : v1) {
    const Vertex v = c.out_neighbors(u).first();
    // C - uv is a path from v to u.
    std::vector<Vertex> cpath{v};
    while (cpath.back() != u) cpath.push_back(c.out_neighbors(cpath.back()).first());
    const std::vector<Vertex> p1{succ(u), succ(succ(u)), u};
    std::vector<Vertex> opath = p1;
    opath.push_back(v);
    opath.push_back(succ(v));
    opath.push_back(succ(succ(v)));
    GoodPair p{Branching::from_path(Orientation::In, 6, cpath), Branching::from_path(Orientation::Out, 6, opath)};
    if (validate_good_pair(d, p)) return p;
  }
  return std::nullopt;
}

SolveReport cobipartite_case3(const DiGraph& d, VertexSet v1, VertexSet v2) {
  const int n = d.order();
  SolveReport rep;
  rep.strategy = Strategy::CoBipartiteCase3;
  for (VertexSet side : {v2, v1}) {
    if (auto seed = seed_pair(d, side)) {
      rep.pair = lemma_3good(d, side, *seed);
      rep.detail = side == v2 ? "3good on V2" : "3good on V1";
      return rep;
    }
  }
  // Both sides are 3-vertex tournaments.
  if (auto a = seed_and_extend(d, 4, "4-clique")) {
    rep.pair = a->pair;
    rep.detail = a->route;
    return rep;
  }
  if (auto a = seed_and_3good(d, 3, "3-set")) {
    rep.pair = a->pair;
    rep.detail = a->route;
    return rep;
  }
  if (n == 6) {
    for (const FigurePattern* p : cobipartite_base_cases()) {
      if (auto pair = match_figure(d, *p)) {
        rep.pair = checked(d, *pair, p->name.c_str());
        rep.detail = p->name + " table";
        return rep;
      }
    }
    if (auto pair = six_cycle_pair(d, v1, v2)) {
      rep.pair = *pair;
      rep.detail = "six-cycle split";
      return rep;
    }
  }
  throw Error(ErrorCode::ConstructionFailed, "co-bipartite case 3: no construction applies");
}

}  // namespace

SolveReport cobipartite_report(const DiGraph& d) {
  const auto part = co_bipartition(d);
  require(part.has_value(), "needs a co-bipartite digraph");
  require(d.order() >= 2 && is_k_arc_strong(d, 2), "needs lambda >= 2");
  SolveReport rep;
  if (d.order() <= 5) {
    const Certificate c = small_good_pair(d);
    if (!c.found()) throw Error(ErrorCode::ConstructionFailed, "small co-bipartite digraph without a pair");
    rep.strategy = Strategy::SmallLookup;
    rep.detail = c.route;
    rep.pair = c.pair;
    rep.stats = c.stats;
  } else {
    VertexSet v1 = part->first;
    VertexSet v2 = part->second;
    if (v1.size() > v2.size()) std::swap(v1, v2);
    if (v1.size() >= 4) {
      rep.strategy = Strategy::CoBipartiteCase1;
      rep.pair = cobipartite_case1(d, v1, v2);
    } else if (v1.size() <= 2) {
      rep.strategy = Strategy::CoBipartiteCase2;
      const InducedSubgraph d2 = induced(d, v2);
      rep.pair = extend_by_buffer(d, v1, lift(d2, semicomplete_good_pair(d2.graph), d.order()));
    } else {
      rep = cobipartite_case3(d, v1, v2);
    }
  }
  rep.pair = checked(d, *rep.pair, "co-bipartite");
  rep.validated = true;
  return rep;
}

GoodPair cobipartite_good_pair(const DiGraph& d) { return *cobipartite_report(d).pair; }

namespace {

// One arc per terminal component of X (into Y) and one per initial
// component of Y (from X), all distinct.
bool choose_representatives(const std::vector<std::vector<std::pair<Vertex, Vertex>>>& options, std::size_t i,
                            std::vector<std::pair<Vertex, Vertex>>& chosen) {
  if (i == options.size()) return true;
  for (const auto& arc : options[i]) {
    if (std::find(chosen.begin(), chosen.end(), arc) != chosen.end()) continue;
    chosen.push_back(arc);
    if (choose_representatives(options, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// Grows Q by Lemma extend while some outside vertex has both an in- and an
// out-neighbour in Q, then applies the X/Y construction when every vertex
// is adjacent to Q.
std::optional<GoodPair> claim_a(const DiGraph& d, VertexSet q, GoodPair p) {
  const int n = d.order();
  while (true) {
    VertexSet both;
    for (Vertex v : d.vertices() - q) {
      if (!in_nbrs_in(d, v, q).empty() && !out_nbrs_in(d, v, q).empty()) both.insert(v);
    }
    if (both.empty()) break;
    const InducedSubgraph grown = induced(d, q | both);
    const GoodPair inner = extend_by_buffer(
        grown.graph, grown.project(both),
        GoodPair{p.in.lifted(grown.from_parent, grown.graph.order()),
                 p.out.lifted(grown.from_parent, grown.graph.order())});
    p = lift(grown, inner, n);
    q = q | both;
  }
  if (q == d.vertices()) return p;
  VertexSet x;
  VertexSet y;
  for (Vertex v : d.vertices() - q) {
    if (!in_nbrs_in(d, v, q).empty()) x.insert(v);
    if (!out_nbrs_in(d, v, q).empty()) y.insert(v);
  }
  if ((q | x | y) != d.vertices() || x.empty() || y.empty()) return std::nullopt;

  const InducedSubgraph dx = induced(d, x);
  const InducedSubgraph dy = induced(d, y);
  const SccDecomposition sx = strong_components(dx.graph);
  const SccDecomposition sy = strong_components(dy.graph);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> options;
  for (int c : sx.terminal) {
    auto& opt = options.emplace_back();
    for (Vertex u : dx.lift(sx.members[c])) {
      for (Vertex w : out_nbrs_in(d, u, y)) opt.emplace_back(u, w);
    }
  }
  const std::size_t terminal_count = options.size();
  for (int c : sy.initial) {
    auto& opt = options.emplace_back();
    const VertexSet members = dy.lift(sy.members[c]);
    for (Vertex u : x) {
      for (Vertex w : out_nbrs_in(d, u, members)) opt.emplace_back(u, w);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> chosen;
  if (!choose_representatives(options, 0, chosen)) return std::nullopt;

  // In-branching: Y into Q, then P1, then T_X towards the P1 tails.
  for (Vertex u : y) p.in.attach(u, out_nbrs_in(d, u, q).first());
  for (std::size_t i = 0; i < terminal_count; ++i) p.in.attach(chosen[i].first, chosen[i].second);
  for (bool progress = true; progress;) {
    progress = false;
    for (Vertex w : x - p.in.support()) {
      const VertexSet targets = out_nbrs_in(d, w, x & p.in.support());
      if (!targets.empty()) {
        p.in.attach(w, targets.first());
        progress = true;
      }
    }
  }
  // Out-branching: Q into X, then P2, then T_Y from the P2 heads.
  for (Vertex u : x) p.out.attach(u, in_nbrs_in(d, u, q).first());
  for (std::size_t i = terminal_count; i < chosen.size(); ++i) p.out.attach(chosen[i].second, chosen[i].first);
  for (bool progress = true; progress;) {
    progress = false;
    for (Vertex w : y - p.out.support()) {
      const VertexSet sources = in_nbrs_in(d, w, y & p.out.support());
      if (!sources.empty()) {
        p.out.attach(w, sources.first());
        progress = true;
      }
    }
  }
  if (!validate_good_pair(d, p)) return std::nullopt;
  return p;
}

std::optional<std::pair<GoodPair, std::string>> grow_from_seed(const DiGraph& d) {
  std::optional<std::pair<GoodPair, std::string>> found;
  for (int k : {4, 3, 2}) {
    for_each_subset(d.order(), k, [&](VertexSet s) {
      if (k == 4 && !is_semicomplete_on(d, s)) return true;
      if (k == 3 && arcs_within(d, s) < 4) return true;
      if (k == 2 && arcs_within(d, s) < 2) return true;
      auto seed = seed_pair(d, s);
      if (!seed) return true;
      if (auto p = claim_a(d, s, *seed)) {
        found = std::pair{*p, std::string("claim-a seed=") + (k == 4 ? "4-clique" : k == 3 ? "3-set" : "2-cycle")};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return found;
}

// Hamiltonian path P with D' = D - A(P): a unique initial (terminal)
// component of D' gives an out- (in-) branching disjoint from P; otherwise
// one arc uu+ of P is exchanged for a chord u>z further along P and the
// residual is searched for an out-branching.
std::optional<std::pair<GoodPair, std::string>> hamiltonian_endgame(const DiGraph& d) {
  const int n = d.order();
  if (n > 16) return std::nullopt;
  std::optional<std::pair<GoodPair, std::string>> found;
  int paths = 0;
  for_each_hamiltonian_path(d, [&](const std::vector<Vertex>& path) {
    ++paths;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[path[i]] = i;
    auto on_path = [&](Vertex u, Vertex v) { return pos[v] == pos[u] + 1; };
    auto off_path = [&](Vertex u, Vertex v) { return !on_path(u, v); };
    const Branching p_in = Branching::from_path(Orientation::In, n, path);
    const Branching p_out = Branching::from_path(Orientation::Out, n, path);
    for (Vertex root : d.vertices()) {
      if (auto out = grow_branching(d, d.vertices(), root, Orientation::Out, off_path)) {
        found = std::pair{GoodPair{p_in, *out}, "hamiltonian-path one-initial"};
        return false;
      }
    }
    for (Vertex root : d.vertices()) {
      if (auto in = grow_branching(d, d.vertices(), root, Orientation::In, off_path)) {
        found = std::pair{GoodPair{*in, p_out}, "hamiltonian-path one-terminal"};
        return false;
      }
    }
    for (int i = 0; i + 1 < n; ++i) {
      const Vertex u = path[i];
      for (Vertex z : d.out_neighbors(u)) {
        if (pos[z] <= i + 1) continue;
        Branching in = p_in;
        in.relink(u, z);
        auto unused = [&](Vertex a, Vertex b) {
          if (a == u && b == z) return false;
          if (a == u && b == path[i + 1]) return true;
          return off_path(a, b);
        };
        for (Vertex root : d.vertices()) {
          if (auto out = grow_branching(d, d.vertices(), root, Orientation::Out, unused)) {
            found = std::pair{GoodPair{in, *out}, "hamiltonian-path exchange"};
            return false;
          }
        }
      }
    }
    return paths < 64;
  });
  if (found && !validate_good_pair(d, found->first)) return std::nullopt;
  return found;
}

}  // namespace

SolveReport alpha2_good_pair(const DiGraph& d, const OracleBudget& budget) {
  require(d.order() >= 2, "needs order >= 2");
  require(!d.is_multi(), "needs a simple digraph");
  require(d.order() <= 32 && independence_at_most(d, 2), "needs alpha <= 2");
  require(is_k_arc_strong(d, 2), "needs lambda >= 2");
  SolveReport rep;
  rep.strategy = Strategy::Alpha2Pipeline;
  auto finish = [&](GoodPair p, int stage, std::string detail) {
    rep.pair = checked(d, std::move(p), "alpha2 pipeline");
    rep.stage = stage;
    rep.detail = std::move(detail);
    rep.validated = true;
    return rep;
  };

  if (d.order() <= 6) {
    const Certificate c = small_good_pair(d, budget);
    rep.stats = c.stats;
    if (c.found()) return finish(*c.pair, 1, "small: " + c.route);
  }
  if (is_semicomplete(d)) return finish(semicomplete_good_pair(d), 2, "semicomplete");
  if (co_bipartition(d)) {
    try {
      SolveReport co = cobipartite_report(d);
      return finish(*co.pair, 3, std::string(to_string(co.strategy)) + (co.detail.empty() ? "" : ": " + co.detail));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstructionFailed) throw;
    }
  }
  if (auto grown = grow_from_seed(d)) return finish(grown->first, 4, grown->second);
  if (auto ham = hamiltonian_endgame(d)) return finish(ham->first, 5, ham->second);

  const Certificate c = oracle_good_pair(d, std::nullopt, std::nullopt, budget);
  rep.strategy = Strategy::OracleFallback;
  rep.stats = c.stats;
  rep.stage = 6;
  if (!c.found()) {
    rep.detail = "oracle found no pair";
    return rep;
  }
  return finish(*c.pair, 6, "oracle");
}

}  // namespace branchpair
