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

#include <random>

#include "cgame/solver.hpp"
#include "cgame/strategies.hpp"
#include "doctest.h"

using namespace cgame;

namespace {

const char* kExampleDnf = "dnf 5 4\n1 2 5\n1 3 5\n2 4 5\n3 4 5\n";
const char* kExampleCnf = "cnf 4 4\n1 2\n1 3\n2 4\n3 4\n";

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

Variant bob_start(Mode mode, int k) { return Variant{Player::kBob, std::nullopt, mode, k}; }

// Every legal reply of the player to move after `prefix`.
std::vector<Move> replies(const Graph& g, const Variant& v, const ForcedPrefix& prefix) {
  auto r = replay(g, v, prefix);
  return legal_moves(g, r.state, v);
}

// First move X5, then the solver's choice.
class X5First final : public FormulaStrategy {
 public:
  explicit X5First(const PosFormula& f) : base_(f, Side::kPlayerI) {}
  std::string name() const override { return "x5-first"; }
  Side side() const override { return Side::kPlayerI; }
  FormulaMove choose(const PosFormula& f, const FormulaState& s,
                     std::span<const FormulaHistoryEntry> h) override {
    if (s.assigned() == 0) return {5};
    return base_.choose(f, s, h);
  }
  std::unique_ptr<FormulaStrategy> clone() const override {
    return std::make_unique<X5First>(*this);
  }

 private:
  SolverFormulaStrategy base_;
};

}  // namespace

TEST_CASE("alice-f1 answers s with y") {
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  Variant v = bob_start(Mode::kFree, 4);
  const ForcedPrefix prefix{Move::color_vertex(f1.vertex("s"), 1)};
  auto alice = gadget_strategy(GadgetStrategyKind::kAliceF1, f1);
  auto r = play_vs_optimal(*alice, Player::kAlice, f1, v, prefix);
  CHECK(r.status == Status::kAliceWin);
  REQUIRE(r.trace.size() >= 2);
  CHECK(r.trace[1].move == Move::color_vertex(f1.vertex("y"), 1));
  CHECK(check_strategy_exhaustively(*alice, Player::kAlice, f1, v, prefix).always_wins);
}

TEST_CASE("bob-f1 beats every reply other than y with s's color") {
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  Variant v = bob_start(Mode::kFree, 4);
  const Move s1 = Move::color_vertex(f1.vertex("s"), 1);
  auto bob = gadget_strategy(GadgetStrategyKind::kBobF1, f1);
  int checked = 0;
  for (const Move& reply : replies(f1, v, {s1})) {
    if (reply == Move::color_vertex(f1.vertex("y"), 1)) continue;
    CAPTURE(format_move_short(f1, reply));
    auto check = check_strategy_exhaustively(*bob, Player::kBob, f1, v, {s1, reply});
    CHECK(check.always_wins);
    auto r = play_vs_optimal(*bob, Player::kBob, f1, v, {s1, reply});
    CHECK(r.status == Status::kBobWin);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("bob-f1 opens with s") {
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  Variant v = bob_start(Mode::kFree, 4);
  auto bob = gadget_strategy(GadgetStrategyKind::kBobF1, f1);
  auto m = bob->choose(f1, v, GameState::initial(f1, v), {});
  CHECK(m == Move::color_vertex(f1.vertex("s"), 1));
}

TEST_CASE("alice-f1 against bob-f1") {
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  auto alice = gadget_strategy(GadgetStrategyKind::kAliceF1, f1);
  auto bob = gadget_strategy(GadgetStrategyKind::kBobF1, f1);
  auto r = arena(*alice, *bob, f1, bob_start(Mode::kFree, 4));
  CHECK(r.status == Status::kAliceWin);
  CHECK(r.trace[1].move == Move::color_vertex(f1.vertex("y"), 1));
}

TEST_CASE("bob-f3 beats every reply other than y") {
  for (int k = 1; k <= 4; ++k) {
    Graph f3 = build_gadget(GadgetKind::kF3, k);
    Variant v = bob_start(Mode::kGreedy, k + 1);
    auto bob = gadget_strategy(GadgetStrategyKind::kBobF3, f3);
    const Move s = bob->choose(f3, v, GameState::initial(f3, v), {});
    CHECK(s == Move::color_vertex(f3.vertex("s"), 1));
    for (const Move& reply : replies(f3, v, {s})) {
      CAPTURE(k);
      CAPTURE(format_move_short(f3, reply));
      if (reply.vertex == f3.vertex("y")) {
        CHECK(solve(f3, v, {s, reply}).winner == Player::kAlice);
        continue;
      }
      CHECK(check_strategy_exhaustively(*bob, Player::kBob, f3, v, {s, reply}).always_wins);
      CHECK(play_vs_optimal(*bob, Player::kBob, f3, v, {s, reply}).status == Status::kBobWin);
    }
  }
}

TEST_CASE("arena basics") {
  LowestLegalStrategy a, b;
  Graph p2(2, {{0, 1}});
  auto r = arena(a, b, p2, Variant{Player::kAlice, std::nullopt, Mode::kFree, 2});
  CHECK(r.status == Status::kAliceWin);

  class Cheater final : public Strategy {
   public:
    std::string name() const override { return "cheater"; }
    Move choose(const Graph&, const Variant&, const GameState&,
                std::span<const TraceEntry>) override {
      return Move::color_vertex(0, 1);
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<Cheater>(*this); }
  };
  Cheater c1, c2;
  CHECK_THROWS_AS(arena(c1, c2, p2, Variant{Player::kAlice, std::nullopt, Mode::kFree, 2}),
                  StrategyFailure);
}

TEST_CASE("bob-gb on the DNF example instance") {
  const PosFormula f = parse_formula(kExampleDnf);
  Instance inst = build_gb_instance(f);
  Variant v = bob_start(Mode::kFree, inst.chi);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    ReductionStrategy bob(ReductionStrategyKind::kBobGb, inst, std::make_unique<X5First>(f));
    std::unique_ptr<Strategy> alice;
    if (seed == 6) {
      alice = std::make_unique<LowestLegalStrategy>();
    } else {
      alice = std::make_unique<RandomLegalStrategy>(seed, 0.0);
    }
    auto r = arena(*alice, bob, inst.graph, v);
    CAPTURE(seed);
    CHECK(r.status == Status::kBobWin);
    // Bob's x-moves are exactly the inner strategy's moves.
    std::vector<int> taken;
    const auto& xs = inst.graph.group("x");
    for (const auto& e : r.trace) {
      if (e.player != Player::kBob || e.move.is_pass()) continue;
      auto it = std::find(xs.begin(), xs.end(), e.move.vertex);
      if (it != xs.end()) taken.push_back(static_cast<int>(it - xs.begin()) + 1);
    }
    CHECK(taken == bob.inner_moves());
  }
}

TEST_CASE("bob-greedy on the CNF example instance") {
  const PosFormula f = parse_formula(kExampleCnf);
  REQUIRE(solve_formula_game(f).winner == Side::kPlayerII);
  Instance inst = build_greedy_instance(f);
  Variant v = bob_start(Mode::kGreedy, inst.chi);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    ReductionStrategy bob(ReductionStrategyKind::kBobGreedy, inst,
                          solver_inner(f, Player::kBob));
    RandomLegalStrategy alice(seed, 0.0);
    LowestLegalStrategy lowest;
    Strategy& a = seed == 6 ? static_cast<Strategy&>(lowest) : alice;
    auto r = arena(a, bob, inst.graph, v);
    CAPTURE(seed);
    CHECK(r.status == Status::kBobWin);
  }
}

TEST_CASE("alice-gb twin rule") {
  const PosFormula f = parse_formula("dnf 2 1\n1 2\n");
  ReductionOptions scaled;
  scaled.scale_chi = 9;
  Instance inst = build_gb_instance(f, scaled);
  Variant v = bob_start(Mode::kFree, inst.chi);
  const Graph& g = inst.graph;
  ReductionStrategy alice(ReductionStrategyKind::kAliceGb, inst, solver_inner(f, Player::kAlice));
  GameState st = GameState::initial(g, v);
  Trace t;
  auto play = [&](Player p, Move m) {
    st = apply_move(g, st, v, m);
    t.push_back({p, m});
  };
  play(Player::kBob, Move::color_vertex(g.vertex("s"), 1));
  play(Player::kAlice, alice.choose(g, v, st, t));
  CHECK(t.back().move == Move::color_vertex(g.vertex("y"), 1));
  play(Player::kBob, Move::color_vertex(g.vertex("l'{1,1}"), 3));
  const Move answer = alice.choose(g, v, st, t);
  CHECK(answer.vertex == g.vertex("l''{1,1}"));
  Color least = 1;
  while (check_move(g, st, v, Move::color_vertex(answer.vertex, least))) ++least;
  CHECK(answer.color == least);
  play(Player::kAlice, answer);
  play(Player::kBob, Move::color_vertex(g.vertex("x#1"), 2));
  const Move formula_reply = alice.choose(g, v, st, t);
  CHECK(formula_reply.vertex == g.vertex("x#2"));
  CHECK(formula_reply.color != 1);
}

TEST_CASE("alice-gb answers Bob's variable moves one for one") {
  const PosFormula f = parse_formula("dnf 4 2\n1 2\n3 4\n");
  REQUIRE(solve_formula_game(f).winner == Side::kPlayerII);
  ReductionOptions scaled;
  scaled.scale_chi = 9;
  Instance inst = build_gb_instance(f, scaled);
  Variant v = bob_start(Mode::kFree, inst.chi);
  const Graph& g = inst.graph;
  const auto& xs = g.group("x");
  auto is_x = [&](Vertex u) { return std::find(xs.begin(), xs.end(), u) != xs.end(); };
  const ForcedPrefix opening{Move::color_vertex(g.vertex("s"), 1)};
  int answered = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    ReductionStrategy alice(ReductionStrategyKind::kAliceGb, inst,
                            solver_inner(f, Player::kAlice));
    RandomLegalStrategy bob(seed, 0.0);
    auto r = arena(alice, bob, g, v, opening);
    int x_colored = 0;
    for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) {
      const auto& e = r.trace[i];
      if (e.move.is_pass() || !is_x(e.move.vertex)) continue;
      ++x_colored;
      if (e.player == Player::kBob && x_colored < static_cast<int>(xs.size())) {
        CHECK(is_x(r.trace[i + 1].move.vertex));
        ++answered;
      }
    }
  }
  CHECK(answered > 0);
}

TEST_CASE("connected strategies on K3") {
  Graph k3 = complete(3);
  Instance inst = build_connected_instance(k3, 3, Coloring(std::vector<Color>{1, 2, 3}));
  Variant v{Player::kAlice, std::nullopt, Mode::kConnected, inst.chi};
  const Graph& g = inst.graph;
  auto inner = std::make_unique<OptimalStrategy>(*inst.base_graph, base_variant(inst));
  ConnectedStrategy alice(ConnectedStrategyKind::kAliceConn, inst, std::move(inner));
  auto r = play_vs_optimal(alice, Player::kAlice, g, v);
  CHECK(r.status == Status::kAliceWin);
  CHECK(r.trace.front().move.vertex == g.vertex("y1"));
  CHECK(check_strategy_exhaustively(alice, Player::kAlice, g, v).always_wins);

  auto inner_b = std::make_unique<OptimalStrategy>(*inst.base_graph, base_variant(inst));
  ConnectedStrategy bob(ConnectedStrategyKind::kBobConn, inst, std::move(inner_b));
  auto r2 = arena(alice, bob, g, v);
  REQUIRE(r2.trace.size() >= 2);
  CHECK(r2.trace[0].move.vertex == g.vertex("y1"));
  CHECK(r2.trace[1].move.vertex == g.vertex("s"));
}

TEST_CASE("alice-conn parity rule") {
  Graph p3(3, {{0, 1}, {1, 2}});
  Instance inst = build_connected_instance(p3, 2, Coloring(std::vector<Color>{1, 2, 1}));
  Variant v{Player::kAlice, std::nullopt, Mode::kConnected, inst.chi};
  const Graph& g = inst.graph;
  const int n = 3;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    ConnectedStrategy alice(ConnectedStrategyKind::kAliceConn, inst,
                            std::make_unique<OptimalStrategy>(*inst.base_graph,
                                                              base_variant(inst)));
    RandomLegalStrategy bob(seed, 0.0);
    auto r = arena(alice, bob, g, v);
    bool after_y2 = false;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      const auto& e = r.trace[i];
      if (e.player != Player::kAlice || e.move.is_pass()) continue;
      if (after_y2 && e.move.vertex < n) {
        REQUIRE(i > 0);
        CHECK(r.trace[i - 1].move.vertex < n);
        CHECK(r.trace[i - 1].move.vertex >= 0);
      }
      if (e.move.vertex == g.vertex("y2")) after_y2 = true;
    }
  }
}
