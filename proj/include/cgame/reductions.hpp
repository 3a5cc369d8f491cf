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

#ifndef CGAME_REDUCTIONS_HPP_
#define CGAME_REDUCTIONS_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgame/formula.hpp"
#include "cgame/graph.hpp"

namespace cgame {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GadgetKind { kF1, kF3 };

struct GadgetOptions {
  // The F3 drawing has w adjacent to y only; set to also join w to K.
  bool f3_w_joins_k = false;
};

// F1: clique K (k), independent set Q (k+3), s-w, s and w joined to K,
// y joined to K and Q. F3: clique K (k), s joined to K, y joined to K, w-y.
// Vertices are s, w, y, then K, then Q. Throws InstanceError for k < 1.
Graph build_gadget(GadgetKind kind, int k, GadgetOptions options = {});
GraphSpec gadget_spec(GadgetKind kind, int k, GadgetOptions options = {});

enum class InstanceKind { kGb, kGreedy, kConnected };
std::string to_string(InstanceKind kind);

struct ReductionOptions {
  // Replaces the chromatic number M+3N+25 by a smaller value so that K, Q
  // and the L_j cliques shrink. Instances built this way do not carry the
  // game-theoretic guarantees of the construction.
  std::optional<int> scale_chi;
  GadgetOptions gadget;
};

struct Instance {
  Graph graph;
  InstanceKind kind = InstanceKind::kGb;
  int chi = 0;
  // False when built with a scale override.
  bool faithful = true;
  // False when the declared chromatic number of a connected-reduction input
  // was too large to check and was taken on trust.
  bool certified = true;

  // Formula reductions.
  std::optional<PosFormula> formula;
  // Per clause: both twins of every l_{j,k} followed by L_j.
  std::vector<std::vector<Vertex>> conjunction_cliques;

  // Connected reduction: the input graph occupies ids 0..base_n-1.
  std::optional<Graph> base_graph;
  int base_chi = 0;
  Coloring base_witness;
};

// POS-DNF-11 formula to a Bob-start coloring-game instance.
Instance build_gb_instance(const PosFormula& f, ReductionOptions options = {});
// POS-CNF-11 formula to a Bob-start greedy-game instance.
Instance build_greedy_instance(const PosFormula& f, ReductionOptions options = {});
// Bob-start coloring-game instance (G, chi(G)) with |V(G)| odd to an
// Alice-start connected-game instance with chromatic number chi(G)+1.
Instance build_connected_instance(const Graph& g, int chi_g,
                                  const Coloring& witness);

// A proper coloring of inst.graph with exactly inst.chi colors.
Coloring witness_coloring(const Instance& inst);
// A clique of inst.graph with inst.chi vertices.
std::vector<Vertex> witness_clique(const Instance& inst);

// Graph format followed by "chi <value>", "witness-color <v> <c>" lines and
// a "witness-clique <v>..." line.
void write_instance(std::ostream& out, const Instance& inst);

struct Certificate {
  Graph graph;
  int chi = 0;
  Coloring coloring;
  std::vector<Vertex> clique;
};
// Reads the output of write_instance. Throws ParseError.
Certificate read_certificate(std::istream& in);

}  // namespace cgame

#endif  // CGAME_REDUCTIONS_HPP_
