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

#include <functional>
#include <random>

#include "cgame/game.hpp"
#include "cgame/reductions.hpp"
#include "cgame/strategy.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cgame;

namespace {

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

Variant variant(Player starter, Mode mode, int k, std::optional<Player> passer = {}) {
  return Variant{starter, passer, mode, k};
}

GameState with_colors(std::vector<Color> c, Player p = Player::kAlice) {
  return GameState{Coloring(std::move(c)), p};
}

const Mode kModes[] = {Mode::kFree, Mode::kGreedy, Mode::kConnected};

}  // namespace

TEST_CASE("sees") {
  Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(sees(Graph(1, {}), with_colors({0}), 0).empty());
  CHECK(sees(g, with_colors({0, 1, 1, 3}), 0) == std::vector<Color>{1, 3});

  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  Variant v = variant(Player::kBob, Mode::kFree, 4);
  GameState st = GameState::initial(f1, v);
  st = apply_move(f1, st, v, Move::color_vertex(f1.vertex("s"), 1));
  st = apply_move(f1, st, v, Move::color_vertex(f1.vertex("w"), 2));
  st = apply_move(f1, st, v, Move::color_vertex(f1.vertex("Q#1"), 1));
  auto y = sees(f1, st, f1.vertex("y"));
  CHECK(std::find(y.begin(), y.end(), 1) != y.end());
}

TEST_CASE("greedy_color") {
  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(greedy_color(star, with_colors({0, 0, 0, 0, 0}), 0) == 1);
  CHECK(greedy_color(star, with_colors({0, 1, 2, 4, 0}), 0) == 3);
  CHECK(greedy_color(star, with_colors({0, 1, 2, 3, 0}), 0) == 4);
  CHECK_THROWS_AS(greedy_color(star, with_colors({1, 0, 0, 0, 0}), 0), std::logic_error);
}

TEST_CASE("legal_moves examples") {
  Graph k3 = complete(3);
  auto free_moves = legal_moves(k3, GameState::initial(k3, variant(Player::kAlice, Mode::kFree, 3)),
                                variant(Player::kAlice, Mode::kFree, 3));
  CHECK(free_moves.size() == 9);
  CHECK(std::is_sorted(free_moves.begin(), free_moves.end()));
  Variant gv = variant(Player::kAlice, Mode::kGreedy, 3);
  auto greedy_moves = legal_moves(k3, GameState::initial(k3, gv), gv);
  CHECK(greedy_moves.size() == 3);
  for (auto m : greedy_moves) CHECK(m.color == 1);

  Graph p3(3, {{0, 1}, {1, 2}});
  Variant cv = variant(Player::kAlice, Mode::kConnected, 2, Player::kBob);
  auto conn = legal_moves(p3, with_colors({1, 0, 0}, Player::kBob), cv);
  REQUIRE(conn.size() == 2);
  CHECK(conn[0] == Move::color_vertex(1, 2));
  CHECK(conn[1].is_pass());
}

TEST_CASE("apply_move") {
  Graph p2(2, {{0, 1}});
  Variant v = variant(Player::kAlice, Mode::kFree, 2, Player::kAlice);
  GameState st = GameState::initial(p2, v);
  GameState next = apply_move(p2, st, v, Move::color_vertex(1, 2));
  CHECK(next.coloring[1] == 2);
  CHECK(next.to_move == Player::kBob);
  CHECK(st.coloring[1] == kNoColor);
  GameState passed = apply_move(p2, st, v, Move::pass());
  CHECK(passed.coloring == st.coloring);
  CHECK(passed.to_move == Player::kBob);
  CHECK_THROWS_AS(apply_move(p2, passed, v, Move::pass()), RuleViolation);
  CHECK_THROWS_AS(apply_move(p2, next, v, Move::color_vertex(0, 2)), RuleViolation);
  CHECK_THROWS_AS(apply_move(p2, next, v, Move::color_vertex(1, 1)), RuleViolation);
  CHECK_THROWS_AS(apply_move(p2, st, v, Move::color_vertex(0, 3)), RuleViolation);

  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  Variant bv = variant(Player::kBob, Mode::kFree, 4);
  GameState f = apply_move(f1, GameState::initial(f1, bv), bv,
                           Move::color_vertex(f1.vertex("s"), 1));
  CHECK_NOTHROW(apply_move(f1, f, bv, Move::color_vertex(f1.vertex("y"), 1)));
}

TEST_CASE("greedy and connected violations are named") {
  Graph p3(3, {{0, 1}, {1, 2}});
  Variant gv = variant(Player::kAlice, Mode::kGreedy, 3);
  auto why = check_move(p3, GameState::initial(p3, gv), gv, Move::color_vertex(0, 2));
  REQUIRE(why);
  Variant cv = variant(Player::kAlice, Mode::kConnected, 3);
  auto why2 = check_move(p3, with_colors({1, 0, 0}, Player::kBob), cv, Move::color_vertex(2, 1));
  REQUIRE(why2);
  CHECK(*why != *why2);
}

TEST_CASE("status") {
  Graph k3 = complete(3);
  Variant v = variant(Player::kAlice, Mode::kFree, 2);
  CHECK(status(k3, with_colors({1, 2, 0}), v) == Status::kBobWin);
  CHECK(status(k3, with_colors({1, 0, 0}), v) == Status::kOngoing);
  Variant v3 = variant(Player::kAlice, Mode::kFree, 3);
  CHECK(status(k3, with_colors({1, 2, 3}), v3) == Status::kAliceWin);
  Variant gv = variant(Player::kAlice, Mode::kGreedy, 2);
  CHECK(status(k3, with_colors({1, 2, 0}), gv) == Status::kBobWin);
}

TEST_CASE("variant and move syntax") {
  Variant v = parse_variant("bob-start,greedy,pass=alice", 3);
  CHECK(v.starter == Player::kBob);
  CHECK(v.mode == Mode::kGreedy);
  CHECK(v.passer == Player::kAlice);
  CHECK(v.k == 3);
  CHECK(parse_variant(to_string(v), 3) == v);
  CHECK_FALSE(parse_variant("alice-start,connected,pass=none", 2).passer);
  CHECK_THROWS_AS(parse_variant("carol-start,free", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_variant("alice-start", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_variant("alice-start,free", 0), std::invalid_argument);
  CHECK_THROWS_AS(validate_variant(Graph(2, {}), parse_variant("alice-start,connected", 2)),
                  std::invalid_argument);

  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  CHECK(parse_move(f1, "move 3 2") == Move::color_vertex(3, 2));
  CHECK(parse_move(f1, "s:1") == Move::color_vertex(0, 1));
  CHECK(parse_move(f1, "Q#2 4") == Move::color_vertex(f1.vertex("Q#2"), 4));
  CHECK(parse_move(f1, "pass").is_pass());
  CHECK_THROWS_AS(parse_move(f1, "move x 1"), std::invalid_argument);
  CHECK(format_move(Move::color_vertex(3, 2)) == "move 3 2");
  CHECK(format_move(Move::pass()) == "pass");
  CHECK(format_move_short(f1, Move::color_vertex(2, 1)) == "y:1");
  Trace t{{Player::kAlice, Move::color_vertex(0, 1)}, {Player::kBob, Move::pass()}};
  CHECK(format_trace(t) == "Alice move 0 1\nBob pass\n");
}

TEST_CASE("playout invariants") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_connected_graph(n, 0.35, rng);
    const Mode mode = kModes[rng() % 3];
    const int k = 1 + static_cast<int>(rng() % 4);
    std::optional<Player> passer;
    if (rng() % 3 == 1) passer = Player::kAlice;
    if (rng() % 3 == 2) passer = Player::kBob;
    Variant v = variant(rng() % 2 ? Player::kAlice : Player::kBob, mode, k, passer);
    RandomLegalStrategy a(rng()), b(rng());
    MatchResult r = arena(a, b, g, v);
    CAPTURE(to_string(v));
    CHECK(r.status != Status::kOngoing);
    CHECK(static_cast<int>(r.trace.size()) <= 2 * n + 1);

    GameState st = GameState::initial(g, v);
    for (const auto& e : r.trace) {
      if (!e.move.is_pass()) {
        const Vertex u = e.move.vertex;
        if (mode == Mode::kGreedy) CHECK(e.move.color == greedy_color(g, st, u));
      }
      if (mode == Mode::kFree) {
        int expected = st.to_move == passer ? 1 : 0;
        for (Vertex u = 0; u < n; ++u) {
          if (!st.coloring.colored(u)) expected += k - static_cast<int>(sees(g, st, u).size());
        }
        if (status(g, st, v) == Status::kOngoing) {
          CHECK(static_cast<int>(legal_moves(g, st, v).size()) == expected);
        }
      }
      st = apply_move(g, st, v, e.move);
      CHECK(is_proper(g, st.coloring, k) == st.coloring.total());
      if (mode == Mode::kConnected) CHECK(colored_set_connected(g, st.coloring));
    }
  }
}

TEST_CASE("early Bob win is final") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int rep = 0; rep < 400 && checked < 60; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_connected_graph(n, 0.5, rng);
    const Mode mode = kModes[rng() % 3];
    Variant v = variant(Player::kAlice, mode, 1 + static_cast<int>(rng() % 3), Player::kAlice);
    RandomLegalStrategy a(rng(), 0.0), b(rng(), 0.0);
    MatchResult r = arena(a, b, g, v);
    if (r.status != Status::kBobWin) continue;
    GameState st = GameState::initial(g, v);
    for (const auto& e : r.trace) st = apply_move(g, st, v, e.move);
    ++checked;
    // Any sequence of legal moves by anyone: none completes the coloring.
    std::function<bool(const GameState&)> completes = [&](const GameState& s) {
      if (s.coloring.total()) return true;
      for (const Move& m : legal_moves(g, s, v)) {
        if (m.is_pass()) continue;
        GameState t = s;
        t.coloring.set(m.vertex, m.color);
        if (completes(t)) return true;
      }
      return false;
    };
    CHECK_FALSE(completes(st));
  }
  CHECK(checked > 20);
}
