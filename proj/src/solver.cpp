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

#include "cgame/solver.hpp"

#include <algorithm>
#include <array>

namespace cgame {

namespace {

constexpr int kMaxColors = 63;

std::uint64_t bit(Color c) { return std::uint64_t{1} << c; }

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("node budget of " + std::to_string(budget) +
                         " positions exceeded") {}

Solver::Solver(const Graph& g, const Variant& variant, SolveOptions options)
    : g_(g), variant_(variant), options_(options) {
  validate_variant(g, variant);
  if (variant.k > kMaxColors) {
    throw std::invalid_argument("solver supports at most " +
                                std::to_string(kMaxColors) + " colors");
  }
  if (variant.mode == Mode::kGreedy) options_.canonicalize = false;
  order_.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) order_[v] = v;
  std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
}

std::string Solver::key(const Colors& colors, Player to_move) const {
  std::string out(colors.size() + 1, '\0');
  if (options_.canonicalize) {
    std::array<std::uint8_t, kMaxColors + 1> relabel{};
    std::uint8_t next = 0;
    for (std::size_t v = 0; v < colors.size(); ++v) {
      std::uint8_t c = colors[v];
      if (c != 0 && relabel[c] == 0) relabel[c] = ++next;
      out[v] = static_cast<char>(c == 0 ? 0 : relabel[c]);
    }
  } else {
    for (std::size_t v = 0; v < colors.size(); ++v) {
      out[v] = static_cast<char>(colors[v]);
    }
  }
  out.back() = to_move == Player::kAlice ? 'A' : 'B';
  return out;
}

Player Solver::search(Colors& colors, Player to_move, int num_colored) {
  const int n = g_.num_vertices();
  if (num_colored == n) return Player::kAlice;
  ++nodes_;
  if (options_.node_budget != 0 && nodes_ > options_.node_budget) {
    throw BudgetExceeded(options_.node_budget);
  }

  const std::uint64_t all_colors = ((std::uint64_t{1} << variant_.k) - 1) << 1;
  std::uint64_t used = 0;
  for (auto c : colors) used |= c ? bit(c) : 0;

  // Seen masks double as the early blockage test.
  std::vector<std::uint64_t> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (colors[v]) continue;
    for (Vertex u : g_.neighbors(v)) {
      if (colors[u]) seen[v] |= bit(colors[u]);
    }
    if ((seen[v] & all_colors) == all_colors) return Player::kBob;
  }

  const std::string k = key(colors, to_move);
  if (auto it = table_.find(k); it != table_.end()) {
    return it->second ? Player::kAlice : Player::kBob;
  }

  const Player other = opponent(to_move);
  bool mover_wins = false;
  bool any_move = false;

  auto try_child = [&](Vertex v, Color c) {
    any_move = true;
    colors[v] = static_cast<std::uint8_t>(c);
    Player w = search(colors, other, num_colored + 1);
    colors[v] = 0;
    return w == to_move;
  };

  // Colors never used so far are interchangeable outside greedy mode; only
  // the smallest one is tried.
  Color fresh = 1;
  while (used & bit(fresh)) ++fresh;

  for (Vertex v : order_) {
    if (mover_wins) break;
    if (colors[v]) continue;
    if (variant_.mode == Mode::kConnected && num_colored > 0 && seen[v] == 0) {
      continue;
    }
    if (variant_.mode == Mode::kGreedy) {
      Color c = 1;
      while (seen[v] & bit(c)) ++c;
      if (c <= variant_.k && try_child(v, c)) mover_wins = true;
      continue;
    }
    for (Color c = 1; c <= variant_.k && !mover_wins; ++c) {
      if (seen[v] & bit(c)) continue;
      if (!(used & bit(c)) && c != fresh) continue;
      if (try_child(v, c)) mover_wins = true;
    }
  }
  if (!mover_wins && variant_.passer == to_move) {
    any_move = true;
    if (search(colors, other, num_colored) == to_move) mover_wins = true;
  }
  Player result = mover_wins ? to_move : other;
  if (!any_move) result = Player::kBob;
  table_.emplace(k, result == Player::kAlice);
  return result;
}

Player Solver::winner(const GameState& state) {
  Colors colors(state.coloring.values().begin(), state.coloring.values().end());
  return search(colors, state.to_move, state.coloring.num_colored());
}

std::optional<Move> Solver::winning_move(const GameState& state) {
  if (status(g_, state, variant_) != Status::kOngoing) return std::nullopt;
  for (const Move& m : legal_moves(g_, state, variant_)) {
    if (winner(apply_move(g_, state, variant_, m)) == state.to_move) return m;
  }
  return std::nullopt;
}

SolveResult Solver::solve_from(const GameState& state) {
  SolveResult result;
  result.k = variant_.k;
  result.root_player = state.to_move;
  const std::uint64_t start = nodes_;
  switch (status(g_, state, variant_)) {
    case Status::kAliceWin:
      result.winner = Player::kAlice;
      break;
    case Status::kBobWin:
      result.winner = Player::kBob;
      break;
    case Status::kOngoing:
      for (const Move& m : legal_moves(g_, state, variant_)) {
        if (winner(apply_move(g_, state, variant_, m)) == state.to_move) {
          result.winning_root_moves.push_back(m);
        }
      }
      result.winner = result.winning_root_moves.empty()
                          ? opponent(state.to_move)
                          : state.to_move;
      break;
  }
  result.nodes = nodes_ - start;
  return result;
}

SolveResult solve(const Graph& g, const Variant& variant,
                  const ForcedPrefix& prefix, SolveOptions options) {
  validate_variant(g, variant);
  auto start = replay(g, variant, prefix);
  Solver solver(g, variant, options);
  return solver.solve_from(start.state);
}

std::vector<Move> winning_first_moves(const Graph& g, const Variant& variant,
                                      const ForcedPrefix& prefix,
                                      SolveOptions options) {
  return solve(g, variant, prefix, options).winning_root_moves;
}

GameNumberReport game_number(const Graph& g, const Variant& variant_template,
                             int k_min, int k_max, SolveOptions options) {
  if (k_min < 1 || k_max < k_min) {
    throw std::invalid_argument("bad color range");
  }
  GameNumberReport report;
  for (int k = k_min; k <= k_max; ++k) {
    Variant v = variant_template;
    v.k = k;
    Player w = solve(g, v, {}, options).winner;
    report.winners[k] = w;
    if (w == Player::kAlice && !report.min_alice_k) report.min_alice_k = k;
  }
  if (variant_template.mode == Mode::kGreedy) {
    bool alice_seen = false;
    for (auto [k, w] : report.winners) {
      if (alice_seen && w == Player::kBob) {
        throw std::logic_error("greedy game lost with " + std::to_string(k) +
                               " colors after a win with fewer");
      }
      alice_seen |= w == Player::kAlice;
    }
  }
  return report;
}

OptimalStrategy::OptimalStrategy(const Graph& g, const Variant& variant,
                                 SolveOptions options)
    : solver_(std::make_shared<Solver>(g, variant, options)) {}

Move OptimalStrategy::choose(const Graph& g, const Variant& variant,
                             const GameState& state,
                             std::span<const TraceEntry>) {
  if (auto m = solver_->winning_move(state)) return *m;
  return fallback(g, variant, state, "no winning move");
}

MatchResult play_vs_optimal(Strategy& s, Player side, const Graph& g,
                            const Variant& variant, const ForcedPrefix& prefix,
                            SolveOptions options) {
  OptimalStrategy optimal(g, variant, options);
  return side == Player::kAlice ? arena(s, optimal, g, variant, prefix)
                                : arena(optimal, s, g, variant, prefix);
}

namespace {

class ExhaustiveChecker {
 public:
  ExhaustiveChecker(Player side, const Graph& g, const Variant& variant)
      : side_(side), g_(g), variant_(variant) {}

  // True if `s` wins from `state` against every opponent line.
  bool wins(const Strategy& s, const GameState& state, Trace& trace,
            Status st) {
    ++positions_;
    if (st != Status::kOngoing) {
      bool won = (st == Status::kAliceWin) == (side_ == Player::kAlice);
      if (!won) counterexample_ = trace;
      return won;
    }
    if (state.to_move == side_) {
      auto mine = s.clone();
      Move m = mine->choose(g_, variant_, state, trace);
      if (auto why = check_move(g_, state, variant_, m)) {
        throw StrategyFailure(mine->name(), m, *why);
      }
      return step(*mine, state, trace, m);
    }
    for (const Move& m : legal_moves(g_, state, variant_)) {
      if (!step(s, state, trace, m)) return false;
    }
    return true;
  }

  std::uint64_t positions() const { return positions_; }
  const Trace& counterexample() const { return counterexample_; }

 private:
  bool step(const Strategy& s, const GameState& state, Trace& trace,
            const Move& m) {
    GameState next = state;
    if (!m.is_pass()) next.coloring.set(m.vertex, m.color);
    next.to_move = opponent(state.to_move);
    trace.push_back({state.to_move, m});
    bool ok = wins(s, next, trace,
                   status_after(g_, next, variant_, m.is_pass() ? -1 : m.vertex));
    trace.pop_back();
    return ok;
  }

  Player side_;
  const Graph& g_;
  const Variant& variant_;
  std::uint64_t positions_ = 0;
  Trace counterexample_;
};

}  // namespace

StrategyCheck check_strategy_exhaustively(const Strategy& s, Player side,
                                          const Graph& g,
                                          const Variant& variant,
                                          const ForcedPrefix& prefix) {
  validate_variant(g, variant);
  auto start = replay(g, variant, prefix);
  ExhaustiveChecker checker(side, g, variant);
  StrategyCheck out;
  out.always_wins = checker.wins(s, start.state, start.trace,
                                 status(g, start.state, variant));
  out.positions = checker.positions();
  if (!out.always_wins) out.counterexample = checker.counterexample();
  return out;
}

}  // namespace cgame
