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

#ifndef CGAME_STRATEGIES_HPP_
#define CGAME_STRATEGIES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgame/formula.hpp"
#include "cgame/reductions.hpp"
#include "cgame/strategy.hpp"

namespace cgame {

// Scripted play on the F1/F3 gadgets (or on any graph carrying the s, w, y,
// K and Q labels).
//   alice-f1: answer s<-c with y<-c, then play lowest legal moves.
//   bob-f1:   open s<-1, keep y from taking s's color, and force s, w and y
//             onto three distinct colors.
//   bob-f3:   open s, and take w when Alice's reply is not y.
enum class GadgetStrategyKind { kAliceF1, kBobF1, kBobF3 };

std::unique_ptr<Strategy> gadget_strategy(GadgetStrategyKind kind, const Graph& g);

enum class ReductionStrategyKind { kAliceGb, kBobGb, kAliceGreedy, kBobGreedy };

// Plays a formula reduction instance by translating graph moves to moves of
// the underlying formula game and back. The formula strategy is wrapped with
// pass_lift, since moves that do not touch a variable count as passes.
class ReductionStrategy final : public Strategy {
 public:
  // `inst` must outlive the strategy. `inner` must play the formula side of
  // the strategy's player (see side_of).
  ReductionStrategy(ReductionStrategyKind kind, const Instance& inst,
                    std::unique_ptr<FormulaStrategy> inner);
  ReductionStrategy(const ReductionStrategy& other);
  ReductionStrategy& operator=(const ReductionStrategy&) = delete;

  std::string name() const override;
  Move choose(const Graph& g, const Variant& variant, const GameState& state,
              std::span<const TraceEntry> history) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<ReductionStrategy>(*this);
  }

  Player player() const { return player_; }
  // Formula moves inferred so far, both sides, passes included.
  const std::vector<FormulaHistoryEntry>& formula_history() const { return history_; }
  // Variables proposed by the inner formula strategy, in order.
  const std::vector<int>& inner_moves() const { return inner_moves_; }
  const FormulaState& formula_state() const { return formula_; }

 private:
  enum class Phase { kOpening, kFormula, kGadget, kRecolored, kPlayout };
  bool gb() const {
    return kind_ == ReductionStrategyKind::kAliceGb || kind_ == ReductionStrategyKind::kBobGb;
  }

  void record(Side side, FormulaMove m);
  std::optional<int> unset_variable(const std::map<Vertex, int>& vars, Vertex v) const;
  Move playout(const Graph& g, const Variant& variant, const GameState& state,
               const std::string& reason);

  Move opening(const Graph& g, const Variant& variant, const GameState& state,
               std::span<const TraceEntry> history);
  Move bob_turn(const Graph& g, const Variant& variant, const GameState& state,
                std::span<const TraceEntry> history);
  Move alice_turn(const Graph& g, const Variant& variant, const GameState& state,
                  std::span<const TraceEntry> history);
  Move recolored_turn(const Graph& g, const Variant& variant, const GameState& state,
                      std::span<const TraceEntry> history);

  ReductionStrategyKind kind_;
  const Instance* inst_;
  Player player_;
  Side side_;
  std::unique_ptr<FormulaStrategy> inner_;
  Phase phase_ = Phase::kOpening;
  Color truth_color_ = kNoColor;  // the color s and y share
  FormulaState formula_;
  std::vector<FormulaHistoryEntry> history_;
  std::vector<int> inner_moves_;
  std::size_t seen_ = 0;
  std::map<Vertex, int> near_var_;    // N[x_i], and xbar_i -> i
  std::map<Vertex, int> choice_var_;  // x_i, and xbar_i -> i
  std::vector<Vertex> target_;        // vertex colored for variable i
  std::map<Vertex, Vertex> twin_of_;
  std::map<Vertex, int> head_twin_clause_;  // twins of l_{j,0} -> j
};

std::unique_ptr<ReductionStrategy> reduction_strategy(
    ReductionStrategyKind kind, const Instance& inst,
    std::unique_ptr<FormulaStrategy> inner);

// The solver-backed winning formula strategy for the given player, already
// suitable as `inner` above.
std::unique_ptr<FormulaStrategy> solver_inner(const PosFormula& f, Player p);

enum class ConnectedStrategyKind { kAliceConn, kBobConn };

// Scripted play on a connected-reduction instance. Moves inside the input
// graph are delegated to `inner`, which plays the Bob-start game on
// inst.base_graph with inst.base_chi colors; colors are translated around
// the color of s. `inst` must outlive the strategy.
class ConnectedStrategy final : public Strategy {
 public:
  ConnectedStrategy(ConnectedStrategyKind kind, const Instance& inst,
                    std::unique_ptr<Strategy> inner);
  ConnectedStrategy(const ConnectedStrategy& other);
  ConnectedStrategy& operator=(const ConnectedStrategy&) = delete;

  std::string name() const override;
  Move choose(const Graph& g, const Variant& variant, const GameState& state,
              std::span<const TraceEntry> history) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<ConnectedStrategy>(*this);
  }

 private:
  Move alice(const Graph& g, const Variant& variant, const GameState& state,
             std::span<const TraceEntry> history);
  Move bob(const Graph& g, const Variant& variant, const GameState& state,
           std::span<const TraceEntry> history);
  std::optional<Move> gadget_move(const Graph& g, const Variant& variant,
                                  const GameState& state, bool avoid_ys);
  std::optional<Move> inner_move(const Graph& g, const Variant& variant,
                                 const GameState& state,
                                 std::span<const TraceEntry> history);
  bool in_base(Vertex v) const { return v >= 0 && v < base_n_; }

  ConnectedStrategyKind kind_;
  const Instance* inst_;
  std::unique_ptr<Strategy> inner_;
  int base_n_;
};

std::unique_ptr<ConnectedStrategy> connected_strategy(
    ConnectedStrategyKind kind, const Instance& inst,
    std::unique_ptr<Strategy> inner);

// The variant an inner strategy of a connected strategy plays.
Variant base_variant(const Instance& inst);

}  // namespace cgame

#endif  // CGAME_STRATEGIES_HPP_
