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

#ifndef CGAME_GRAPH_HPP_
#define CGAME_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cgame {

using Vertex = int;
// Colors are 1-based; kNoColor marks an uncolored vertex.
using Color = int;
inline constexpr Color kNoColor = 0;

using LabelMap = std::map<std::string, std::vector<Vertex>>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph with named vertex groups.
class Graph {
 public:
  Graph() = default;
  // Edges are deduplicated; self-loops and out-of-range ids throw GraphError.
  Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges,
        LabelMap labels = {});

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Sorted (u < v) edge list.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const LabelMap& labels() const { return labels_; }
  bool has_group(const std::string& name) const;
  // Throws GraphError for unknown groups.
  const std::vector<Vertex>& group(const std::string& name) const;

  // Resolves "name" (a singleton group), "group#i" (1-based member of a
  // group) or a decimal vertex id.
  std::optional<Vertex> find_vertex(const std::string& name) const;
  Vertex vertex(const std::string& name) const;

  // Inverse of find_vertex: singleton label, then "group#i", then the id.
  std::string vertex_name(Vertex v) const;

  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int num_edges_ = 0;
  LabelMap labels_;
};

// Partial assignment of colors to vertices.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int num_vertices) : colors_(num_vertices, kNoColor) {}
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  int size() const { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[v]; }
  bool colored(Vertex v) const { return colors_[v] != kNoColor; }
  void set(Vertex v, Color c) { colors_[v] = c; }
  int num_colored() const;
  bool total() const { return num_colored() == size(); }
  Color max_color() const;
  const std::vector<Color>& values() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

// Declarative construction steps. Vertex references are resolved through
// Graph::find_vertex semantics against the groups created so far.
namespace build {
struct AddClique { int size; std::string name; };
struct AddIndependentSet { int size; std::string name; };
struct AddVertex { std::string name; };
struct Join { std::string group_a; std::string group_b; };
struct AddEdge { std::string u; std::string v; };
// Adds a new vertex `name` adjacent to `vertex` and to all its neighbors.
struct SplitTrueTwin { std::string vertex; std::string name; };
struct AddPendant { std::string vertex; std::string name; };
}  // namespace build

using BuildStep =
    std::variant<build::AddClique, build::AddIndependentSet, build::AddVertex,
                 build::Join, build::AddEdge, build::SplitTrueTwin,
                 build::AddPendant>;

struct GraphSpec {
  std::vector<BuildStep> steps;

  template <typename Step>
  GraphSpec& add(Step step) {
    steps.emplace_back(std::move(step));
    return *this;
  }
};

class SpecError : public GraphError {
 public:
  SpecError(std::size_t step, const std::string& what);
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Vertices are numbered in step order; a split twin or pendant takes the
// next free id.
Graph assemble(const GraphSpec& spec);

bool is_proper(const Graph& g, const Coloring& c, int k);
bool verify_clique(const Graph& g, std::span<const Vertex> vs);
bool colored_set_connected(const Graph& g, const Coloring& c);

class GraphTooLarge : public GraphError {
 public:
  using GraphError::GraphError;
};

inline constexpr int kDefaultExactLimit = 16;

struct ExactColoring {
  int chromatic_number = 0;
  Coloring coloring;
};

// Branch-and-bound (DSATUR order). Throws GraphTooLarge when n > limit.
ExactColoring optimal_coloring(const Graph& g, int limit = kDefaultExactLimit);
int chromatic_number_exact(const Graph& g, int limit = kDefaultExactLimit);

// Line-oriented text format:
//   graph <n>
//   edge <u> <v>
//   label <name> <id>...
// Blank lines and lines starting with '#' are ignored. Unknown keywords are
// rejected unless `extra` is given, in which case they are forwarded to it.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedGraphFile {
  Graph graph;
  // Lines whose keyword is not part of the graph format, in order.
  std::vector<std::pair<int, std::string>> extra_lines;
};

Graph parse_graph(std::istream& in);
ParsedGraphFile parse_graph_file(std::istream& in, bool allow_extra);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace cgame

#endif  // CGAME_GRAPH_HPP_
