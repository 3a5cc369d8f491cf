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

#ifndef CGAME_FORMULA_HPP_
#define CGAME_FORMULA_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

// Positional games on monotone formulas. Player I sets variables True,
// Player II sets them False; Player I moves first and wins iff the formula
// is True once every variable is set.
enum class FormulaKind { kCnf, kDnf };

inline constexpr int kWidthCap = 11;
inline constexpr int kMaxFormulaVariables = 24;

// Variables are 1-based.
struct PosFormula {
  FormulaKind kind = FormulaKind::kCnf;
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // each sorted, distinct, nonempty
  bool width_capped = false;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
};

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validates the invariants above; throws FormulaError.
PosFormula make_formula(FormulaKind kind, int num_vars,
                        std::vector<std::vector<int>> clauses,
                        bool width_capped = false);

// Header "cnf|dnf|cnf11|dnf11 <N> <M>" then M lines of 1-based variable
// indices. Blank lines and '#' comments are skipped. Throws ParseError.
PosFormula parse_formula(std::istream& in);
PosFormula parse_formula(const std::string& text);
void write_formula(std::ostream& out, const PosFormula& f);

// Bit i-1 stands for variable i.
using VarSet = std::uint32_t;
constexpr VarSet var_bit(int var) { return VarSet{1} << (var - 1); }

// Unset variables count as False.
bool evaluate(const PosFormula& f, VarSet trues);

enum class Side { kPlayerI, kPlayerII };
constexpr Side other(Side s) {
  return s == Side::kPlayerI ? Side::kPlayerII : Side::kPlayerI;
}
std::string to_string(Side s);

// CNF: Alice is Player I. DNF: Bob is Player I.
Side side_of(Player p, FormulaKind kind);
Player player_of(Side s, FormulaKind kind);

struct FormulaState {
  VarSet set_true = 0;
  VarSet set_false = 0;
  Side to_move = Side::kPlayerI;

  VarSet assigned() const { return set_true | set_false; }
  friend bool operator==(const FormulaState&, const FormulaState&) = default;
};

// 0 is a pass, otherwise the variable set by the mover.
struct FormulaMove {
  int var = 0;

  static FormulaMove pass() { return {}; }
  bool is_pass() const { return var == 0; }
  friend auto operator<=>(const FormulaMove&, const FormulaMove&) = default;
};

struct FormulaHistoryEntry {
  Side side;
  FormulaMove move;
};

// Throws FormulaError for a set variable or a pass without pass rights.
FormulaState apply(const PosFormula& f, const FormulaState& s,
                   std::optional<Side> passer, FormulaMove m);
bool finished(const PosFormula& f, const FormulaState& s);
// Winner of a finished game.
Side final_winner(const PosFormula& f, const FormulaState& s);

struct FormulaSolveResult {
  Side winner = Side::kPlayerI;
  std::vector<FormulaMove> winning_first_moves;  // ascending, pass last
  std::uint64_t nodes = 0;
};

class FormulaSolver {
 public:
  FormulaSolver(const PosFormula& f, std::optional<Side> passer);

  Side winner(const FormulaState& s);
  // Moves from `s` that win for the mover, ascending, pass last.
  std::vector<FormulaMove> winning_moves(const FormulaState& s);
  std::uint64_t nodes() const { return nodes_; }
  const PosFormula& formula() const { return f_; }

 private:
  // Winner when decided by the current partial assignment alone.
  std::optional<Side> decided(const FormulaState& s) const;

  PosFormula f_;
  std::optional<Side> passer_;
  std::unordered_map<std::uint64_t, bool> table_;  // true: Player I wins
  std::uint64_t nodes_ = 0;
};

// Solves from the empty assignment with Player I to move. Throws
// FormulaError when N exceeds kMaxFormulaVariables.
FormulaSolveResult solve_formula_game(const PosFormula& f,
                                      std::optional<Side> passer = std::nullopt);

// A policy for one side of a formula game. `history` lists every move so
// far, including passes.
class FormulaStrategy {
 public:
  virtual ~FormulaStrategy() = default;
  virtual std::string name() const = 0;
  virtual Side side() const = 0;
  virtual FormulaMove choose(const PosFormula& f, const FormulaState& s,
                             std::span<const FormulaHistoryEntry> history) = 0;
  virtual std::unique_ptr<FormulaStrategy> clone() const = 0;
};

// Plays a winning move of the no-pass game when one exists, otherwise the
// lowest unset variable. Clones share the transposition table.
class SolverFormulaStrategy final : public FormulaStrategy {
 public:
  SolverFormulaStrategy(const PosFormula& f, Side side);

  std::string name() const override { return "formula-solver"; }
  Side side() const override { return side_; }
  FormulaMove choose(const PosFormula& f, const FormulaState& s,
                     std::span<const FormulaHistoryEntry> history) override;
  std::unique_ptr<FormulaStrategy> clone() const override {
    return std::make_unique<SolverFormulaStrategy>(*this);
  }

 private:
  Side side_;
  std::shared_ptr<FormulaSolver> solver_;
};

class AdapterError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Turns a strategy for the no-pass game into one that tolerates opponent
// passes. Each opponent pass is read as the opponent taking the lowest
// unset variable (an "assumed" variable); the base strategy then plays on
// that virtual position. If the opponent later takes an assumed variable,
// another unset variable is assumed in its place. Once the virtual game is
// complete, the remaining assumed variables are taken in ascending order.
class PassLiftedStrategy final : public FormulaStrategy {
 public:
  explicit PassLiftedStrategy(std::unique_ptr<FormulaStrategy> base);
  PassLiftedStrategy(const PassLiftedStrategy& other);
  PassLiftedStrategy& operator=(const PassLiftedStrategy&) = delete;

  std::string name() const override { return "pass-lift(" + base_->name() + ")"; }
  Side side() const override { return base_->side(); }
  FormulaMove choose(const PosFormula& f, const FormulaState& s,
                     std::span<const FormulaHistoryEntry> history) override;
  std::unique_ptr<FormulaStrategy> clone() const override {
    return std::make_unique<PassLiftedStrategy>(*this);
  }

  VarSet assumed() const { return assumed_; }
  const FormulaState& virtual_state() const { return virtual_; }
  // Feeds history entries the strategy has not seen yet.
  void sync(const PosFormula& f, std::span<const FormulaHistoryEntry> history);

 private:
  void assume_fresh(const PosFormula& f);
  void add_to(Side side, int var);

  std::unique_ptr<FormulaStrategy> base_;
  FormulaState virtual_;
  std::vector<FormulaHistoryEntry> virtual_history_;
  VarSet assumed_ = 0;
  std::size_t seen_ = 0;
};

std::unique_ptr<FormulaStrategy> pass_lift(std::unique_ptr<FormulaStrategy> base);

}  // namespace cgame

#endif  // CGAME_FORMULA_HPP_
