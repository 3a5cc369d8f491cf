// Copyright 2026 The cgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace cgame {

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph::Graph(int num_vertices,
             const std::vector<std::pair<Vertex, Vertex>>& edges,
             LabelMap labels)
    : adjacency_(num_vertices), labels_(std::move(labels)) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw GraphError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    num_edges_ += static_cast<int>(nbrs.size());
  }
  num_edges_ /= 2;
  for (const auto& [name, members] : labels_) {
    for (Vertex v : members) {
      if (v < 0 || v >= num_vertices) {
        throw GraphError("label " + name + " references vertex " +
                         std::to_string(v) + " out of range");
      }
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_group(const std::string& name) const {
  return labels_.contains(name);
}

const std::vector<Vertex>& Graph::group(const std::string& name) const {
  auto it = labels_.find(name);
  if (it == labels_.end()) throw GraphError("unknown label group: " + name);
  return it->second;
}

std::optional<Vertex> Graph::find_vertex(const std::string& name) const {
  if (auto it = labels_.find(name); it != labels_.end()) {
    if (it->second.size() == 1) return it->second.front();
    return std::nullopt;
  }
  if (auto hash = name.rfind('#'); hash != std::string::npos) {
    auto it = labels_.find(name.substr(0, hash));
    auto index = parse_int(std::string_view(name).substr(hash + 1));
    if (it != labels_.end() && index && *index >= 1 &&
        *index <= static_cast<int>(it->second.size())) {
      return it->second[*index - 1];
    }
    return std::nullopt;
  }
  if (auto id = parse_int(name); id && *id >= 0 && *id < num_vertices()) {
    return *id;
  }
  return std::nullopt;
}

Vertex Graph::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw GraphError("cannot resolve vertex: " + name);
  return *v;
}

std::string Graph::vertex_name(Vertex v) const {
  for (const auto& [name, members] : labels_) {
    if (members.size() == 1 && members.front() == v) return name;
  }
  for (const auto& [name, members] : labels_) {
    auto it = std::find(members.begin(), members.end(), v);
    if (it != members.end()) {
      return name + "#" + std::to_string(it - members.begin() + 1);
    }
  }
  return std::to_string(v);
}

bool Graph::connected() const {
  if (num_vertices() <= 1) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == num_vertices();
}

int Coloring::num_colored() const {
  return static_cast<int>(
      std::count_if(colors_.begin(), colors_.end(),
                    [](Color c) { return c != kNoColor; }));
}

Color Coloring::max_color() const {
  return colors_.empty() ? kNoColor
                         : *std::max_element(colors_.begin(), colors_.end());
}

SpecError::SpecError(std::size_t step, const std::string& what)
    : GraphError("build step " + std::to_string(step) + ": " + what),
      step_(step) {}

namespace {

class Builder {
 public:
  Graph finish() && {
    std::vector<std::pair<Vertex, Vertex>> edges(edges_.begin(), edges_.end());
    return Graph(num_vertices_, edges, std::move(labels_));
  }

  void run(std::size_t index, const BuildStep& step) {
    index_ = index;
    std::visit([this](const auto& s) { apply(s); }, step);
  }

 private:
  void apply(const build::AddClique& s) {
    auto members = fresh_group(s.name, s.size);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        connect(members[i], members[j]);
      }
    }
  }
  void apply(const build::AddIndependentSet& s) { fresh_group(s.name, s.size); }
  void apply(const build::AddVertex& s) { fresh_group(s.name, 1); }
  void apply(const build::Join& s) {
    const auto a = members(s.group_a);
    const auto b = members(s.group_b);
    for (Vertex u : a) {
      for (Vertex v : b) {
        if (u != v) connect(u, v);
      }
    }
  }
  void apply(const build::AddEdge& s) {
    Vertex u = resolve(s.u);
    Vertex v = resolve(s.v);
    if (u == v) fail("self-loop on " + s.u);
    connect(u, v);
  }
  void apply(const build::SplitTrueTwin& s) {
    Vertex v = resolve(s.vertex);
    std::vector<Vertex> nbrs;
    for (auto [a, b] : edges_) {
      if (a == v) nbrs.push_back(b);
      if (b == v) nbrs.push_back(a);
    }
    Vertex twin = fresh_group(s.name, 1).front();
    connect(v, twin);
    for (Vertex u : nbrs) connect(u, twin);
  }
  void apply(const build::AddPendant& s) {
    Vertex v = resolve(s.vertex);
    connect(v, fresh_group(s.name, 1).front());
  }

  std::vector<Vertex> fresh_group(const std::string& name, int size) {
    if (size < 0) fail("negative size for " + name);
    if (name.empty()) fail("empty group name");
    if (labels_.contains(name)) fail("duplicate group name " + name);
    std::vector<Vertex> out;
    for (int i = 0; i < size; ++i) out.push_back(num_vertices_++);
    labels_[name] = out;
    return out;
  }

  std::vector<Vertex> members(const std::string& ref) const {
    if (auto it = labels_.find(ref); it != labels_.end()) return it->second;
    return {resolve(ref)};
  }

  Vertex resolve(const std::string& ref) const {
    // Resolution only needs labels and the vertex count.
    if (auto it = labels_.find(ref); it != labels_.end()) {
      if (it->second.size() == 1) return it->second.front();
      fail("group " + ref + " is not a single vertex");
    }
    if (auto hash = ref.rfind('#'); hash != std::string::npos) {
      auto it = labels_.find(ref.substr(0, hash));
      auto index = parse_int(std::string_view(ref).substr(hash + 1));
      if (it != labels_.end() && index && *index >= 1 &&
          *index <= static_cast<int>(it->second.size())) {
        return it->second[*index - 1];
      }
    }
    fail("unresolved reference " + ref);
  }

  void connect(Vertex u, Vertex v) {
    edges_.emplace(std::min(u, v), std::max(u, v));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError(index_, what);
  }

  std::size_t index_ = 0;
  int num_vertices_ = 0;
  std::set<std::pair<Vertex, Vertex>> edges_;
  LabelMap labels_;
};

}  // namespace

Graph assemble(const GraphSpec& spec) {
  Builder builder;
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    builder.run(i, spec.steps[i]);
  }
  return std::move(builder).finish();
}

bool is_proper(const Graph& g, const Coloring& c, int k) {
  if (c.size() != g.num_vertices()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c[v] < 1 || c[v] > k) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

bool verify_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.num_vertices()) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool colored_set_connected(const Graph& g, const Coloring& c) {
  std::vector<Vertex> colored;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c.colored(v)) colored.push_back(v);
  }
  if (colored.size() <= 1) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack = {colored.front()};
  seen[colored.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (c.colored(v) && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == colored.size();
}

namespace {

// Decides k-colorability by backtracking in DSATUR order; new colors are
// only opened in increasing order.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k) : g_(g), k_(k), colors_(g.num_vertices()) {}

  bool run() { return extend(0, 0); }
  const Coloring& coloring() const { return colors_; }

 private:
  bool extend(int colored, int used) {
    if (colored == g_.num_vertices()) return true;
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    std::vector<char> seen(k_ + 1);
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (colors_.colored(v)) continue;
      std::fill(seen.begin(), seen.end(), 0);
      int sat = 0;
      for (Vertex u : g_.neighbors(v)) {
        Color c = colors_[u];
        if (c != kNoColor && !seen[c]) {
          seen[c] = 1;
          ++sat;
        }
      }
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g_.degree(v);
      }
    }
    for (Color c = 1; c <= std::min(k_, used + 1); ++c) {
      bool ok = true;
      for (Vertex u : g_.neighbors(best)) {
        if (colors_[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colors_.set(best, c);
      if (extend(colored + 1, std::max(used, c))) return true;
      colors_.set(best, kNoColor);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  Coloring colors_;
};

}  // namespace

ExactColoring optimal_coloring(const Graph& g, int limit) {
  if (g.num_vertices() > limit) {
    throw GraphTooLarge("graph has " + std::to_string(g.num_vertices()) +
                        " vertices; exact chromatic number limited to " +
                        std::to_string(limit));
  }
  if (g.num_vertices() == 0) return {0, Coloring(0)};
  for (int k = 1;; ++k) {
    KColorSearch search(g, k);
    if (search.run()) return {k, search.coloring()};
  }
}

int chromatic_number_exact(const Graph& g, int limit) {
  return optimal_coloring(g, limit).chromatic_number;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

ParsedGraphFile parse_graph_file(std::istream& in, bool allow_extra) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::set<std::pair<Vertex, Vertex>> edges;
  LabelMap labels;
  std::vector<std::pair<int, std::string>> extra;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword) || keyword.front() == '#') continue;
    auto read_id = [&](const char* what) {
      std::string tok;
      if (!(tokens >> tok)) throw ParseError(line_no, std::string("missing ") + what);
      auto id = parse_int(tok);
      if (!id || *id < 0 || *id >= n) {
        throw ParseError(line_no, "bad vertex id '" + tok + "'");
      }
      return *id;
    };
    if (keyword == "graph") {
      if (n >= 0) throw ParseError(line_no, "duplicate graph header");
      std::string tok;
      tokens >> tok;
      auto count = parse_int(tok);
      if (!count || *count < 0) throw ParseError(line_no, "bad vertex count");
      n = *count;
      continue;
    }
    if (n < 0) {
      if (allow_extra && keyword != "edge" && keyword != "label") {
        extra.emplace_back(line_no, line);
        continue;
      }
      throw ParseError(line_no, "expected 'graph <n>' header");
    }
    if (keyword == "edge") {
      Vertex u = read_id("edge endpoint");
      Vertex v = read_id("edge endpoint");
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      if (!edges.emplace(std::min(u, v), std::max(u, v)).second) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                      std::to_string(v));
      }
    } else if (keyword == "label") {
      std::string name;
      if (!(tokens >> name)) throw ParseError(line_no, "missing label name");
      if (labels.contains(name)) throw ParseError(line_no, "duplicate label " + name);
      std::vector<Vertex> members;
      std::string tok;
      while (tokens >> tok) {
        auto id = parse_int(tok);
        if (!id || *id < 0 || *id >= n) {
          throw ParseError(line_no, "bad vertex id '" + tok + "'");
        }
        members.push_back(*id);
      }
      labels.emplace(name, std::move(members));
      continue;
    } else if (allow_extra) {
      extra.emplace_back(line_no, line);
      continue;
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
    std::string trailing;
    if (tokens >> trailing) throw ParseError(line_no, "trailing token '" + trailing + "'");
  }
  if (n < 0) throw ParseError(line_no, "missing 'graph <n>' header");
  std::vector<std::pair<Vertex, Vertex>> edge_list(edges.begin(), edges.end());
  return {Graph(n, edge_list, std::move(labels)), std::move(extra)};
}

Graph parse_graph(std::istream& in) {
  return parse_graph_file(in, false).graph;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  for (const auto& [name, members] : g.labels()) {
    out << "label " << name;
    for (Vertex v : members) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace cgame
