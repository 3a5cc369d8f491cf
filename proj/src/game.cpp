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

#include "cgame/game.hpp"

#include <algorithm>
#include <sstream>

namespace cgame {

std::string to_string(Player p) {
  return p == Player::kAlice ? "Alice" : "Bob";
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::kFree: return "free";
    case Mode::kGreedy: return "greedy";
    case Mode::kConnected: return "connected";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kOngoing: return "Ongoing";
    case Status::kAliceWin: return "AliceWin";
    case Status::kBobWin: return "BobWin";
  }
  return "?";
}

Variant parse_variant(const std::string& text, int k) {
  Variant v;
  v.k = k;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("variant must be <starter>,<mode>[,pass=<side>]: " + text);
  }
  if (parts[0] == "alice-start") {
    v.starter = Player::kAlice;
  } else if (parts[0] == "bob-start") {
    v.starter = Player::kBob;
  } else {
    throw std::invalid_argument("unknown starter '" + parts[0] + "'");
  }
  if (parts[1] == "free") {
    v.mode = Mode::kFree;
  } else if (parts[1] == "greedy") {
    v.mode = Mode::kGreedy;
  } else if (parts[1] == "connected") {
    v.mode = Mode::kConnected;
  } else {
    throw std::invalid_argument("unknown mode '" + parts[1] + "'");
  }
  if (parts.size() == 3) {
    if (parts[2] == "pass=alice") {
      v.passer = Player::kAlice;
    } else if (parts[2] == "pass=bob") {
      v.passer = Player::kBob;
    } else if (parts[2] != "pass=none") {
      throw std::invalid_argument("unknown pass setting '" + parts[2] + "'");
    }
  }
  if (k < 1) throw std::invalid_argument("color count must be >= 1");
  return v;
}

std::string to_string(const Variant& v) {
  std::string out = v.starter == Player::kAlice ? "alice-start" : "bob-start";
  out += "," + to_string(v.mode);
  if (v.passer) out += v.passer == Player::kAlice ? ",pass=alice" : ",pass=bob";
  return out;
}

void validate_variant(const Graph& g, const Variant& v) {
  if (v.k < 1) throw std::invalid_argument("color count must be >= 1");
  if (v.mode == Mode::kConnected && !g.connected()) {
    throw std::invalid_argument("connected mode requires a connected graph");
  }
}

std::vector<Color> sees(const Graph& g, const GameState& state, Vertex v) {
  std::vector<Color> out;
  for (Vertex u : g.neighbors(v)) {
    if (state.coloring.colored(u)) out.push_back(state.coloring[u]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Color greedy_color(const Graph& g, const GameState& state, Vertex v) {
  if (state.coloring.colored(v)) {
    throw std::logic_error("greedy_color on colored vertex " + std::to_string(v));
  }
  Color mex = 1;
  for (Color c : sees(g, state, v)) {
    if (c == mex) {
      ++mex;
    } else if (c > mex) {
      break;
    }
  }
  return mex;
}

namespace {

bool touches_colored(const Graph& g, const GameState& state, Vertex v) {
  for (Vertex u : g.neighbors(v)) {
    if (state.coloring.colored(u)) return true;
  }
  return false;
}

bool reachable(const Graph& g, const GameState& state, const Variant& variant,
               Vertex v) {
  if (variant.mode != Mode::kConnected) return true;
  return touches_colored(g, state, v) || state.coloring.num_colored() == 0;
}

bool can_pass(const GameState& state, const Variant& variant) {
  return variant.passer == state.to_move;
}

}  // namespace

bool blocked(const Graph& g, const GameState& state, const Variant& variant,
             Vertex v) {
  if (state.coloring.colored(v)) return false;
  // For every mode the vertex is dead once it sees all of 1..k.
  return greedy_color(g, state, v) > variant.k;
}

std::vector<Move> legal_moves(const Graph& g, const GameState& state,
                              const Variant& variant) {
  std::vector<Move> out;
  const bool nothing_colored = state.coloring.num_colored() == 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (state.coloring.colored(v)) continue;
    if (variant.mode == Mode::kConnected && !nothing_colored &&
        !touches_colored(g, state, v)) {
      continue;
    }
    if (variant.mode == Mode::kGreedy) {
      Color c = greedy_color(g, state, v);
      if (c <= variant.k) out.push_back(Move::color_vertex(v, c));
      continue;
    }
    auto seen = sees(g, state, v);
    for (Color c = 1; c <= variant.k; ++c) {
      if (!std::binary_search(seen.begin(), seen.end(), c)) {
        out.push_back(Move::color_vertex(v, c));
      }
    }
  }
  if (can_pass(state, variant) && state.coloring.num_colored() < g.num_vertices()) {
    out.push_back(Move::pass());
  }
  return out;
}

std::optional<std::string> check_move(const Graph& g, const GameState& state,
                                      const Variant& variant, const Move& m) {
  if (state.coloring.num_colored() == g.num_vertices()) {
    return "game is over: every vertex is colored";
  }
  if (m.is_pass()) {
    if (!can_pass(state, variant)) {
      return to_string(state.to_move) + " has no pass rights";
    }
    return std::nullopt;
  }
  if (m.vertex >= g.num_vertices()) {
    return "vertex " + std::to_string(m.vertex) + " does not exist";
  }
  if (state.coloring.colored(m.vertex)) {
    return "vertex " + std::to_string(m.vertex) + " is already colored";
  }
  if (m.color < 1 || m.color > variant.k) {
    return "color " + std::to_string(m.color) + " is outside 1.." +
           std::to_string(variant.k);
  }
  for (Vertex u : g.neighbors(m.vertex)) {
    if (state.coloring[u] == m.color) {
      return "vertex " + std::to_string(m.vertex) + " already sees color " +
             std::to_string(m.color) + " on neighbor " + std::to_string(u);
    }
  }
  if (variant.mode == Mode::kGreedy) {
    Color least = greedy_color(g, state, m.vertex);
    if (m.color != least) {
      return "greedy rule: vertex " + std::to_string(m.vertex) +
             " must take color " + std::to_string(least);
    }
  }
  if (!reachable(g, state, variant, m.vertex)) {
    return "connectivity rule: vertex " + std::to_string(m.vertex) +
           " has no colored neighbor";
  }
  return std::nullopt;
}

GameState apply_move(const Graph& g, const GameState& state,
                     const Variant& variant, const Move& m) {
  if (auto why = check_move(g, state, variant, m)) throw RuleViolation(*why);
  GameState next = state;
  if (!m.is_pass()) next.coloring.set(m.vertex, m.color);
  next.to_move = opponent(state.to_move);
  return next;
}

namespace {

Status stuck_status(const Graph& g, const GameState& state,
                    const Variant& variant) {
  if (can_pass(state, variant)) return Status::kOngoing;
  return lowest_legal_move(g, state, variant) ? Status::kOngoing
                                              : Status::kBobWin;
}

}  // namespace

Status status(const Graph& g, const GameState& state, const Variant& variant) {
  if (state.coloring.num_colored() == g.num_vertices()) return Status::kAliceWin;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (blocked(g, state, variant, v)) return Status::kBobWin;
  }
  return stuck_status(g, state, variant);
}

Status status_after(const Graph& g, const GameState& state,
                    const Variant& variant, Vertex last) {
  if (state.coloring.num_colored() == g.num_vertices()) return Status::kAliceWin;
  if (last >= 0) {
    for (Vertex u : g.neighbors(last)) {
      if (blocked(g, state, variant, u)) return Status::kBobWin;
    }
  }
  return stuck_status(g, state, variant);
}

std::optional<Move> lowest_legal_move(const Graph& g, const GameState& state,
                                      const Variant& variant) {
  const bool nothing_colored = state.coloring.num_colored() == 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (state.coloring.colored(v)) continue;
    if (variant.mode == Mode::kConnected && !nothing_colored &&
        !touches_colored(g, state, v)) {
      continue;
    }
    // The least free color is both the lowest Free choice and the greedy one.
    Color c = greedy_color(g, state, v);
    if (c <= variant.k) return Move::color_vertex(v, c);
  }
  return std::nullopt;
}

std::string format_move(const Move& m) {
  if (m.is_pass()) return "pass";
  return "move " + std::to_string(m.vertex) + " " + std::to_string(m.color);
}

Move parse_move(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "pass") return Move::pass();
  if (!tokens.empty() && tokens[0] == "move") tokens.erase(tokens.begin());
  if (tokens.size() == 1) {
    auto colon = tokens[0].rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad move: " + text);
    tokens = {tokens[0].substr(0, colon), tokens[0].substr(colon + 1)};
  }
  if (tokens.size() != 2) throw std::invalid_argument("bad move: " + text);
  auto v = g.find_vertex(tokens[0]);
  if (!v) throw std::invalid_argument("unknown vertex '" + tokens[0] + "'");
  Color c = 0;
  try {
    std::size_t used = 0;
    c = std::stoi(tokens[1], &used);
    if (used != tokens[1].size()) throw std::invalid_argument(tokens[1]);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad color '" + tokens[1] + "'");
  }
  return Move::color_vertex(*v, c);
}

std::string format_move_short(const Graph& g, const Move& m) {
  if (m.is_pass()) return "pass";
  return g.vertex_name(m.vertex) + ":" + std::to_string(m.color);
}

std::string format_trace(const Trace& trace) {
  std::string out;
  for (const auto& entry : trace) {
    out += to_string(entry.player) + " " + format_move(entry.move) + "\n";
  }
  return out;
}

}  // namespace cgame
