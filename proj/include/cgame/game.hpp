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

#ifndef CGAME_GAME_HPP_
#define CGAME_GAME_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgame/graph.hpp"

namespace cgame {

enum class Player { kAlice, kBob };

constexpr Player opponent(Player p) {
  return p == Player::kAlice ? Player::kBob : Player::kAlice;
}
std::string to_string(Player p);

// Free: any color not seen. Greedy: the least color not seen.
// Connected: as Free, and the colored vertices must stay connected.
enum class Mode { kFree, kGreedy, kConnected };
std::string to_string(Mode m);

struct Variant {
  Player starter = Player::kAlice;
  std::optional<Player> passer;
  Mode mode = Mode::kFree;
  int k = 1;

  friend bool operator==(const Variant&, const Variant&) = default;
};

// Parses "<alice-start|bob-start>,<free|greedy|connected>[,pass=<alice|bob|none>]".
// The color count is supplied separately. Throws std::invalid_argument.
Variant parse_variant(const std::string& text, int k);
std::string to_string(const Variant& v);

// Throws std::invalid_argument if k < 1 or the variant needs a connected
// graph and g is not.
void validate_variant(const Graph& g, const Variant& v);

struct Move {
  Vertex vertex = -1;  // -1 for a pass
  Color color = kNoColor;

  static Move pass() { return {}; }
  static Move color_vertex(Vertex v, Color c) { return {v, c}; }
  bool is_pass() const { return vertex < 0; }

  friend auto operator<=>(const Move&, const Move&) = default;
};

struct GameState {
  Coloring coloring;
  Player to_move = Player::kAlice;

  static GameState initial(const Graph& g, const Variant& v) {
    return {Coloring(g.num_vertices()), v.starter};
  }

  friend bool operator==(const GameState&, const GameState&) = default;
};

enum class Status { kOngoing, kAliceWin, kBobWin };
std::string to_string(Status s);

class RuleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Colors on v's colored neighbors, ascending and distinct.
std::vector<Color> sees(const Graph& g, const GameState& state, Vertex v);

// Least positive color absent from sees(v); may exceed k.
Color greedy_color(const Graph& g, const GameState& state, Vertex v);

// Ascending (vertex, color), then the pass move when available.
std::vector<Move> legal_moves(const Graph& g, const GameState& state,
                              const Variant& variant);

// Why `m` is illegal, or nullopt. Costs O(deg(v)).
std::optional<std::string> check_move(const Graph& g, const GameState& state,
                                      const Variant& variant, const Move& m);

// Throws RuleViolation naming the broken rule.
GameState apply_move(const Graph& g, const GameState& state,
                     const Variant& variant, const Move& m);

// Bob wins as soon as an uncolored vertex can never be colored.
Status status(const Graph& g, const GameState& state, const Variant& variant);

// Same result as status() when the state before coloring `last` was Ongoing.
// Only `last`'s neighborhood is inspected.
Status status_after(const Graph& g, const GameState& state,
                    const Variant& variant, Vertex last);

// True when v can never be colored under `variant` (independent of turn).
bool blocked(const Graph& g, const GameState& state, const Variant& variant,
             Vertex v);

// The lowest (vertex, color) non-pass legal move without enumerating all of
// them.
std::optional<Move> lowest_legal_move(const Graph& g, const GameState& state,
                                      const Variant& variant);

struct TraceEntry {
  Player player;
  Move move;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};
using Trace = std::vector<TraceEntry>;

// "move <v> <c>" or "pass".
std::string format_move(const Move& m);
// Accepts "move <v> <c>", "<v> <c>", "<v>:<c>" and "pass"; vertex names
// resolve through graph labels. Throws std::invalid_argument.
Move parse_move(const Graph& g, const std::string& text);
// "<name>:<color>" using graph labels, or "pass".
std::string format_move_short(const Graph& g, const Move& m);
// One "<Player> move <v> <c>" line per entry.
std::string format_trace(const Trace& trace);

}  // namespace cgame

#endif  // CGAME_GAME_HPP_
