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

#include "branchpair/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace branchpair {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

std::optional<int> to_int(std::string_view word) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

}  // namespace

LabeledDigraph parse_labeled_text(std::string_view text) {
  std::optional<bool> multi;
  std::optional<int> n;
  ArcList arcs;
  std::vector<std::pair<int, std::string>> labels;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto words = split_words(line.substr(1));
      if (words.size() == 3 && words[0] == "label") {
        const auto index = to_int(words[1]);
        if (!index || *index < 0) throw SyntaxError(line_no, "bad label index");
        labels.emplace_back(*index, std::string(words[2]));
      }
      continue;
    }
    if (!multi) {
      if (line == "digraph") {
        multi = false;
      } else if (line == "multidigraph") {
        multi = true;
      } else {
        throw SyntaxError(line_no, "expected 'digraph' or 'multidigraph'");
      }
      continue;
    }
    const auto words = split_words(line);
    if (!n) {
      const auto value = words.size() == 1 ? to_int(words[0]) : std::nullopt;
      if (!value || *value < 0) throw SyntaxError(line_no, "expected a vertex count");
      if (*value > kMaxVertices) {
        throw Error(ErrorCode::InconsistentHeader, "vertex count " + std::to_string(*value) + " exceeds 64");
      }
      n = *value;
      continue;
    }
    const auto tail = words.size() == 2 ? to_int(words[0]) : std::nullopt;
    const auto head = words.size() == 2 ? to_int(words[1]) : std::nullopt;
    if (!tail || !head) throw SyntaxError(line_no, "expected 'tail head'");
    arcs.emplace_back(*tail, *head);
  }
  if (!multi || !n) throw Error(ErrorCode::InconsistentHeader, "missing header or vertex count");

  LabeledDigraph result{DiGraph::build(*n, arcs, *multi), std::vector<std::string>(*n)};
  for (auto& [index, name] : labels) {
    if (index >= *n) throw Error(ErrorCode::InconsistentHeader, "label for vertex " + std::to_string(index));
    result.labels[index] = std::move(name);
  }
  return result;
}

DiGraph parse_text(std::string_view text) { return parse_labeled_text(text).graph; }

LabeledDigraph read_labeled_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidParameters, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_labeled_text(buffer.str());
}

namespace {

std::string emit_body(const DiGraph& d, const std::vector<std::string>* labels) {
  std::string out = d.is_multi() ? "multidigraph\n" : "digraph\n";
  out += std::to_string(d.order()) + "\n";
  if (labels) {
    for (Vertex v = 0; v < d.order() && v < static_cast<Vertex>(labels->size()); ++v) {
      if (!(*labels)[v].empty()) out += "# label " + std::to_string(v) + " " + (*labels)[v] + "\n";
    }
  }
  for (const Arc& a : d.arcs()) {
    for (int k = 0; k < a.multiplicity; ++k) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string emit_dot_body(const DiGraph& d, const std::vector<std::string>* labels,
                          const std::optional<GoodPair>& highlight) {
  auto name = [&](Vertex v) {
    if (labels && v < static_cast<Vertex>(labels->size()) && !(*labels)[v].empty()) return (*labels)[v];
    return std::to_string(v);
  };
  std::string out = "digraph G {\n";
  for (Vertex v = 0; v < d.order(); ++v) out += "  " + quoted(name(v)) + ";\n";
  std::vector<Arc> in_arcs;
  std::vector<Arc> out_arcs;
  if (highlight) {
    in_arcs = highlight->in.arcs();
    out_arcs = highlight->out.arcs();
  }
  auto member = [](const std::vector<Arc>& arcs, const Arc& a) {
    return std::binary_search(arcs.begin(), arcs.end(), a);
  };
  for (const Arc& a : d.arcs()) {
    std::vector<std::string> colours;
    if (member(in_arcs, a)) colours.emplace_back("red");
    if (member(out_arcs, a)) colours.emplace_back("blue");
    while (static_cast<int>(colours.size()) < a.multiplicity) colours.emplace_back("black");
    for (const std::string& c : colours) {
      out += "  " + quoted(name(a.tail)) + " -> " + quoted(name(a.head)) + " [color=" + c + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string emit_text(const DiGraph& d) { return emit_body(d, nullptr); }
std::string emit_text(const LabeledDigraph& d) { return emit_body(d.graph, &d.labels); }

std::string emit_dot(const DiGraph& d, const std::optional<GoodPair>& highlight) {
  return emit_dot_body(d, nullptr, highlight);
}
std::string emit_dot(const LabeledDigraph& d, const std::optional<GoodPair>& highlight) {
  return emit_dot_body(d.graph, &d.labels, highlight);
}

}  // namespace branchpair
