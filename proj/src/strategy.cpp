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

#include "cgame/strategy.hpp"

#include <algorithm>

namespace cgame {

Move Strategy::fallback(const Graph& g, const Variant& variant,
                        const GameState& state, const std::string& reason) {
  Move m = lowest_legal_move(g, state, variant).value_or(Move::pass());
  fallbacks_.push_back(name() + ": " + reason + " -> " + format_move(m));
  return m;
}

Move LowestLegalStrategy::choose(const Graph& g, const Variant& variant,
                                 const GameState& state,
                                 std::span<const TraceEntry>) {
  return lowest_legal_move(g, state, variant).value_or(Move::pass());
}

Move RandomLegalStrategy::choose(const Graph& g, const Variant& variant,
                                 const GameState& state,
                                 std::span<const TraceEntry>) {
  if (variant.passer == state.to_move &&
      std::bernoulli_distribution(pass_rate_)(rng_)) {
    return Move::pass();
  }
  std::vector<Vertex> uncolored;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!state.coloring.colored(v)) uncolored.push_back(v);
  }
  const bool first = static_cast<int>(uncolored.size()) == g.num_vertices();
  auto eligible = [&](Vertex v) {
    if (variant.mode != Mode::kConnected || first) return true;
    for (Vertex u : g.neighbors(v)) {
      if (state.coloring.colored(u)) return true;
    }
    return false;
  };
  auto colors_for = [&](Vertex v) {
    std::vector<Color> out;
    if (!eligible(v)) return out;
    if (variant.mode == Mode::kGreedy) {
      Color c = greedy_color(g, state, v);
      if (c <= variant.k) out.push_back(c);
      return out;
    }
    auto seen = sees(g, state, v);
    for (Color c = 1; c <= variant.k; ++c) {
      if (!std::binary_search(seen.begin(), seen.end(), c)) out.push_back(c);
    }
    return out;
  };
  // Rejection sampling keeps the vertex choice uniform over eligible ones.
  std::shuffle(uncolored.begin(), uncolored.end(), rng_);
  for (Vertex v : uncolored) {
    auto colors = colors_for(v);
    if (colors.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, colors.size() - 1);
    return Move::color_vertex(v, colors[pick(rng_)]);
  }
  return Move::pass();
}

StrategyFailure::StrategyFailure(const std::string& strategy, const Move& move,
                                 const std::string& reason)
    : std::runtime_error(strategy + " played illegal " + format_move(move) +
                         ": " + reason),
      strategy_(strategy),
      move_(move) {}

Replay replay(const Graph& g, const Variant& variant,
              const ForcedPrefix& prefix) {
  Replay out{GameState::initial(g, variant), {}};
  for (const Move& m : prefix) {
    out.trace.push_back({out.state.to_move, m});
    out.state = apply_move(g, out.state, variant, m);
  }
  return out;
}

MatchResult arena(Strategy& alice, Strategy& bob, const Graph& g,
                  const Variant& variant, const ForcedPrefix& prefix) {
  validate_variant(g, variant);
  auto [state, trace] = replay(g, variant, prefix);
  Status st = status(g, state, variant);
  while (st == Status::kOngoing) {
    Strategy& mover = state.to_move == Player::kAlice ? alice : bob;
    Move m = mover.choose(g, variant, state, trace);
    if (auto why = check_move(g, state, variant, m)) {
      throw StrategyFailure(mover.name(), m, *why);
    }
    trace.push_back({state.to_move, m});
    if (!m.is_pass()) state.coloring.set(m.vertex, m.color);
    state.to_move = opponent(state.to_move);
    st = status_after(g, state, variant, m.is_pass() ? -1 : m.vertex);
  }
  return {st, std::move(trace)};
}

}  // namespace cgame
