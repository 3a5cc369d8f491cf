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

#ifndef CGAME_SOLVER_HPP_
#define CGAME_SOLVER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgame/game.hpp"
#include "cgame/strategy.hpp"

namespace cgame {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget);
};

struct SolveOptions {
  // Maximum number of searched positions; 0 means unlimited.
  std::uint64_t node_budget = 0;
  // Relabel colors by first appearance before memo lookup. Never applied in
  // greedy mode, where color values are not interchangeable.
  bool canonicalize = true;
};

struct SolveResult {
  Player winner = Player::kAlice;
  Player root_player = Player::kAlice;
  // Every root move after which the root player wins, ascending.
  std::vector<Move> winning_root_moves;
  std::uint64_t nodes = 0;
  int k = 0;
};

// Exact minimax with a transposition table. One instance serves any number
// of queries on the same graph and variant and keeps its table between them.
class Solver {
 public:
  Solver(const Graph& g, const Variant& variant, SolveOptions options = {});
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  // Winner under optimal play from `state`.
  Player winner(const GameState& state);
  // Lowest move (ascending order) that wins for the player to move.
  std::optional<Move> winning_move(const GameState& state);
  SolveResult solve_from(const GameState& state);

  std::uint64_t nodes() const { return nodes_; }
  std::size_t table_size() const { return table_.size(); }
  const Graph& graph() const { return g_; }
  const Variant& variant() const { return variant_; }

 private:
  using Colors = std::vector<std::uint8_t>;

  Player search(Colors& colors, Player to_move, int num_colored);
  std::string key(const Colors& colors, Player to_move) const;

  const Graph& g_;
  Variant variant_;
  SolveOptions options_;
  std::vector<Vertex> order_;  // degree descending, then id
  std::unordered_map<std::string, bool> table_;  // true: Alice wins
  std::uint64_t nodes_ = 0;
};

// Throws RuleViolation for an illegal prefix and BudgetExceeded.
SolveResult solve(const Graph& g, const Variant& variant,
                  const ForcedPrefix& prefix = {}, SolveOptions options = {});

std::vector<Move> winning_first_moves(const Graph& g, const Variant& variant,
                                      const ForcedPrefix& prefix = {},
                                      SolveOptions options = {});

struct GameNumberReport {
  std::map<int, Player> winners;
  // Least k in range at which Alice wins, if any.
  std::optional<int> min_alice_k;
};

// Solves every k in [k_min, k_max] independently. In greedy mode the map is
// checked for upward closure (Alice winning with k implies winning with
// k+1); a violation throws std::logic_error.
GameNumberReport game_number(const Graph& g, const Variant& variant_template,
                             int k_min, int k_max, SolveOptions options = {});

// Plays the solver's choice for whoever it controls: the lowest winning move
// when one exists, else the lowest legal move.
class OptimalStrategy final : public Strategy {
 public:
  OptimalStrategy(const Graph& g, const Variant& variant,
                  SolveOptions options = {});

  std::string name() const override { return "optimal"; }
  Move choose(const Graph& g, const Variant& variant, const GameState& state,
              std::span<const TraceEntry> history) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<OptimalStrategy>(*this);
  }

 private:
  std::shared_ptr<Solver> solver_;
};

// Plays `s` for `side` against the solver.
MatchResult play_vs_optimal(Strategy& s, Player side, const Graph& g,
                            const Variant& variant,
                            const ForcedPrefix& prefix = {},
                            SolveOptions options = {});

struct StrategyCheck {
  bool always_wins = true;
  // A line the strategy loses, when always_wins is false.
  Trace counterexample;
  std::uint64_t positions = 0;
};

// Plays `s` for `side` against every possible opponent line.
// Throws StrategyFailure on an illegal move.
StrategyCheck check_strategy_exhaustively(const Strategy& s, Player side,
                                          const Graph& g,
                                          const Variant& variant,
                                          const ForcedPrefix& prefix = {});

}  // namespace cgame

#endif  // CGAME_SOLVER_HPP_
