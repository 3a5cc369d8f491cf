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

#include "cgame/formula.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace cgame {

PosFormula make_formula(FormulaKind kind, int num_vars,
                        std::vector<std::vector<int>> clauses,
                        bool width_capped) {
  if (num_vars < 1) throw FormulaError("formula needs at least one variable");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    auto& clause = clauses[j];
    if (clause.empty()) throw FormulaError("clause " + std::to_string(j + 1) + " is empty");
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    if (clause.front() < 1 || clause.back() > num_vars) {
      throw FormulaError("clause " + std::to_string(j + 1) +
                         " references a variable outside 1.." +
                         std::to_string(num_vars));
    }
    if (width_capped && static_cast<int>(clause.size()) > kWidthCap) {
      throw FormulaError("clause " + std::to_string(j + 1) + " has " +
                         std::to_string(clause.size()) + " variables (cap " +
                         std::to_string(kWidthCap) + ")");
    }
  }
  return {kind, num_vars, std::move(clauses), width_capped};
}

PosFormula parse_formula(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  FormulaKind kind = FormulaKind::kCnf;
  bool capped = false;
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> clauses;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first.front() == '#') continue;
    if (!have_header) {
      if (first == "cnf" || first == "cnf11") {
        kind = FormulaKind::kCnf;
      } else if (first == "dnf" || first == "dnf11") {
        kind = FormulaKind::kDnf;
      } else {
        throw ParseError(line_no, "expected cnf|dnf|cnf11|dnf11 header, got '" + first + "'");
      }
      capped = first.ends_with("11");
      std::string extra;
      if (!(tokens >> n >> m) || n < 1 || m < 0 || (tokens >> extra)) {
        throw ParseError(line_no, "header needs <N> <M> with N >= 1, M >= 0");
      }
      if (n > kMaxFormulaVariables) {
        throw ParseError(line_no, "at most " + std::to_string(kMaxFormulaVariables) +
                                      " variables supported");
      }
      have_header = true;
      continue;
    }
    if (static_cast<int>(clauses.size()) == m) {
      throw ParseError(line_no, "more than " + std::to_string(m) + " clauses");
    }
    std::vector<int> clause;
    std::istringstream vars(line);
    for (std::string tok; vars >> tok;) {
      int var = 0;
      std::size_t used = 0;
      try {
        var = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || used == 0) throw ParseError(line_no, "bad variable '" + tok + "'");
      if (var < 1 || var > n) {
        throw ParseError(line_no, "variable " + tok + " outside 1.." + std::to_string(n));
      }
      clause.push_back(var);
    }
    if (capped && static_cast<int>(clause.size()) > kWidthCap) {
      throw ParseError(line_no, "clause wider than " + std::to_string(kWidthCap));
    }
    clauses.push_back(std::move(clause));
  }
  if (!have_header) throw ParseError(line_no, "missing formula header");
  if (static_cast<int>(clauses.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " clauses, got " +
                                  std::to_string(clauses.size()));
  }
  return make_formula(kind, n, std::move(clauses), capped);
}

PosFormula parse_formula(const std::string& text) {
  std::istringstream in(text);
  return parse_formula(in);
}

void write_formula(std::ostream& out, const PosFormula& f) {
  out << (f.kind == FormulaKind::kCnf ? "cnf" : "dnf") << (f.width_capped ? "11" : "")
      << ' ' << f.num_vars << ' ' << f.num_clauses() << '\n';
  for (const auto& clause : f.clauses) {
    for (std::size_t i = 0; i < clause.size(); ++i) out << (i ? " " : "") << clause[i];
    out << '\n';
  }
}

namespace {

VarSet mask_of(const std::vector<int>& clause) {
  VarSet m = 0;
  for (int v : clause) m |= var_bit(v);
  return m;
}

VarSet all_vars(const PosFormula& f) {
  return f.num_vars >= 32 ? ~VarSet{0} : (VarSet{1} << f.num_vars) - 1;
}

}  // namespace

bool evaluate(const PosFormula& f, VarSet trues) {
  if (f.kind == FormulaKind::kCnf) {
    return std::all_of(f.clauses.begin(), f.clauses.end(),
                       [&](const auto& c) { return (mask_of(c) & trues) != 0; });
  }
  return std::any_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
    return (mask_of(c) & trues) == mask_of(c);
  });
}

std::string to_string(Side s) {
  return s == Side::kPlayerI ? "PlayerI" : "PlayerII";
}

Side side_of(Player p, FormulaKind kind) {
  const Player first = kind == FormulaKind::kCnf ? Player::kAlice : Player::kBob;
  return p == first ? Side::kPlayerI : Side::kPlayerII;
}

Player player_of(Side s, FormulaKind kind) {
  const Player first = kind == FormulaKind::kCnf ? Player::kAlice : Player::kBob;
  return s == Side::kPlayerI ? first : opponent(first);
}

FormulaState apply(const PosFormula& f, const FormulaState& s,
                   std::optional<Side> passer, FormulaMove m) {
  FormulaState next = s;
  next.to_move = other(s.to_move);
  if (m.is_pass()) {
    if (passer != s.to_move) throw FormulaError(to_string(s.to_move) + " may not pass");
    return next;
  }
  if (m.var < 1 || m.var > f.num_vars) {
    throw FormulaError("variable " + std::to_string(m.var) + " does not exist");
  }
  if (s.assigned() & var_bit(m.var)) {
    throw FormulaError("variable " + std::to_string(m.var) + " is already set");
  }
  (s.to_move == Side::kPlayerI ? next.set_true : next.set_false) |= var_bit(m.var);
  return next;
}

bool finished(const PosFormula& f, const FormulaState& s) {
  return s.assigned() == all_vars(f);
}

Side final_winner(const PosFormula& f, const FormulaState& s) {
  return evaluate(f, s.set_true) ? Side::kPlayerI : Side::kPlayerII;
}

FormulaSolver::FormulaSolver(const PosFormula& f, std::optional<Side> passer)
    : f_(f), passer_(passer) {
  if (f.num_vars > kMaxFormulaVariables) {
    throw FormulaError("formula has " + std::to_string(f.num_vars) +
                       " variables; the solver is limited to " +
                       std::to_string(kMaxFormulaVariables));
  }
}

std::optional<Side> FormulaSolver::decided(const FormulaState& s) const {
  // Positivity: Player I can only make the formula truer, Player II falser.
  const VarSet optimistic = all_vars(f_) & ~s.set_false;
  if (!evaluate(f_, optimistic)) return Side::kPlayerII;
  if (evaluate(f_, s.set_true)) return Side::kPlayerI;
  return std::nullopt;
}

Side FormulaSolver::winner(const FormulaState& s) {
  ++nodes_;
  if (auto d = decided(s)) return *d;
  const std::uint64_t key = std::uint64_t{s.set_true} |
                            (std::uint64_t{s.set_false} << 24) |
                            (std::uint64_t{s.to_move == Side::kPlayerII} << 48);
  if (auto it = table_.find(key); it != table_.end()) {
    return it->second ? Side::kPlayerI : Side::kPlayerII;
  }
  Side result = other(s.to_move);
  for (int var = 1; var <= f_.num_vars; ++var) {
    if (s.assigned() & var_bit(var)) continue;
    if (winner(apply(f_, s, passer_, {var})) == s.to_move) {
      result = s.to_move;
      break;
    }
  }
  if (result != s.to_move && passer_ == s.to_move &&
      winner(apply(f_, s, passer_, FormulaMove::pass())) == s.to_move) {
    result = s.to_move;
  }
  table_.emplace(key, result == Side::kPlayerI);
  return result;
}

std::vector<FormulaMove> FormulaSolver::winning_moves(const FormulaState& s) {
  std::vector<FormulaMove> out;
  if (finished(f_, s)) return out;
  for (int var = 1; var <= f_.num_vars; ++var) {
    if (s.assigned() & var_bit(var)) continue;
    if (winner(apply(f_, s, passer_, {var})) == s.to_move) out.push_back({var});
  }
  if (passer_ == s.to_move &&
      winner(apply(f_, s, passer_, FormulaMove::pass())) == s.to_move) {
    out.push_back(FormulaMove::pass());
  }
  return out;
}

FormulaSolveResult solve_formula_game(const PosFormula& f,
                                      std::optional<Side> passer) {
  FormulaSolver solver(f, passer);
  FormulaState root;
  FormulaSolveResult result;
  result.winner = solver.winner(root);
  result.winning_first_moves = solver.winning_moves(root);
  result.nodes = solver.nodes();
  return result;
}

SolverFormulaStrategy::SolverFormulaStrategy(const PosFormula& f, Side side)
    : side_(side), solver_(std::make_shared<FormulaSolver>(f, std::nullopt)) {}

FormulaMove SolverFormulaStrategy::choose(const PosFormula& f,
                                          const FormulaState& s,
                                          std::span<const FormulaHistoryEntry>) {
  auto wins = solver_->winning_moves(s);
  if (!wins.empty()) return wins.front();
  for (int var = 1; var <= f.num_vars; ++var) {
    if (!(s.assigned() & var_bit(var))) return {var};
  }
  return FormulaMove::pass();
}

PassLiftedStrategy::PassLiftedStrategy(std::unique_ptr<FormulaStrategy> base)
    : base_(std::move(base)) {}

PassLiftedStrategy::PassLiftedStrategy(const PassLiftedStrategy& other)
    : FormulaStrategy(other),
      base_(other.base_->clone()),
      virtual_(other.virtual_),
      virtual_history_(other.virtual_history_),
      assumed_(other.assumed_),
      seen_(other.seen_) {}

void PassLiftedStrategy::add_to(Side side, int var) {
  (side == Side::kPlayerI ? virtual_.set_true : virtual_.set_false) |= var_bit(var);
  virtual_history_.push_back({side, {var}});
}

void PassLiftedStrategy::assume_fresh(const PosFormula& f) {
  for (int var = 1; var <= f.num_vars; ++var) {
    if (!(virtual_.assigned() & var_bit(var))) {
      assumed_ |= var_bit(var);
      add_to(other(side()), var);
      return;
    }
  }
}

void PassLiftedStrategy::sync(const PosFormula& f,
                              std::span<const FormulaHistoryEntry> history) {
  const Side me = side();
  for (; seen_ < history.size(); ++seen_) {
    const auto& [who, move] = history[seen_];
    if (who == me) {
      if (!move.is_pass() && (assumed_ & var_bit(move.var))) {
        assumed_ &= ~var_bit(move.var);
      } else if (!move.is_pass()) {
        add_to(me, move.var);
      }
      virtual_.to_move = other(me);
      continue;
    }
    if (move.is_pass()) {
      assume_fresh(f);
    } else if (assumed_ & var_bit(move.var)) {
      // Already counted as the opponent's; re-assume elsewhere.
      assumed_ &= ~var_bit(move.var);
      assume_fresh(f);
    } else {
      add_to(who, move.var);
    }
    virtual_.to_move = me;
  }
}

FormulaMove PassLiftedStrategy::choose(const PosFormula& f,
                                       const FormulaState& s,
                                       std::span<const FormulaHistoryEntry> history) {
  sync(f, history);
  if (!finished(f, virtual_)) {
    virtual_.to_move = side();
    FormulaMove m = base_->choose(f, virtual_, virtual_history_);
    if (m.is_pass() || m.var < 1 || m.var > f.num_vars ||
        (virtual_.assigned() & var_bit(m.var)) || (s.assigned() & var_bit(m.var))) {
      throw AdapterError(base_->name() + " chose an unavailable move " +
                         std::to_string(m.var));
    }
    return m;
  }
  for (int var = 1; var <= f.num_vars; ++var) {
    if ((assumed_ & var_bit(var)) && !(s.assigned() & var_bit(var))) return {var};
  }
  throw AdapterError("no unset variable left to take");
}

std::unique_ptr<FormulaStrategy> pass_lift(std::unique_ptr<FormulaStrategy> base) {
  return std::make_unique<PassLiftedStrategy>(std::move(base));
}

}  // namespace cgame
