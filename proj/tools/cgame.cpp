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

// cgame: command-line front end.
//   solve, game-number, formula-solve, reduce, verify, play
// Exit codes: 0 ok, 1 verification failed, 2 input error, 3 budget exceeded.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgame/formula.hpp"
#include "cgame/reductions.hpp"
#include "cgame/solver.hpp"
#include "cgame/strategies.hpp"

using namespace cgame;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

struct LoadedGraph {
  Graph graph;
  std::optional<int> chi;
  std::optional<Coloring> witness;
};

// Plain graph files and reduce certificates are both accepted.
LoadedGraph load_graph(const std::string& path) {
  auto in = open_file(path);
  ParsedGraphFile parsed = parse_graph_file(in, true);
  LoadedGraph out{std::move(parsed.graph), std::nullopt, std::nullopt};
  for (const auto& [line, text] : parsed.extra_lines) {
    std::istringstream ls(text);
    std::string kw;
    ls >> kw;
    if (kw == "chi") {
      int c = 0;
      if (!(ls >> c) || c < 1) throw ParseError(line, "bad chi line");
      out.chi = c;
    } else if (kw == "witness-color") {
      int v = 0, c = 0;
      if (!(ls >> v >> c) || v < 0 || v >= out.graph.num_vertices() || c < 1)
        throw ParseError(line, "bad witness-color line");
      if (!out.witness) out.witness = Coloring(out.graph.num_vertices());
      out.witness->set(v, c);
    } else if (kw != "witness-clique") {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }
  return out;
}

// Lines "witness-color <v> <c>" or "<v> <c>"; '#' starts a comment.
Coloring load_witness(const std::string& path, int n) {
  auto in = open_file(path);
  Coloring c(n);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first != "witness-color") ls = std::istringstream(line);
    int v = 0, col = 0;
    if (!(ls >> v >> col) || v < 0 || v >= n || col < 1)
      throw ParseError(line_no, "expected a vertex and a color");
    c.set(v, col);
  }
  return c;
}

PosFormula load_formula(const std::string& path) {
  auto in = open_file(path);
  return parse_formula(in);
}

// Splits on commas outside braces, so names like l'{1,2} survive.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

ForcedPrefix parse_prefix(const Graph& g, const std::string& text) {
  ForcedPrefix prefix;
  for (const std::string& tok : split_list(text)) {
    try {
      prefix.push_back(parse_move(g, tok));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("prefix: ") + e.what());
    }
  }
  return prefix;
}

Variant read_variant(const Graph& g, const std::string& text, int k) {
  Variant v;
  try {
    v = parse_variant(text, k);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  validate_variant(g, v);
  return v;
}

std::string moves_text(const Graph& g, const std::vector<Move>& ms) {
  std::string out;
  for (const Move& m : ms) {
    if (!out.empty()) out += ",";
    out += format_move_short(g, m);
  }
  return out;
}

std::optional<Side> read_side(const std::string& text) {
  if (text == "none") return std::nullopt;
  if (text == "I" || text == "player-i") return Side::kPlayerI;
  if (text == "II" || text == "player-ii") return Side::kPlayerII;
  throw InputError("bad passer '" + text + "' (none, I, II)");
}

std::string formula_moves_text(const std::vector<FormulaMove>& ms) {
  std::string out;
  for (FormulaMove m : ms) {
    if (!out.empty()) out += ",";
    out += m.is_pass() ? std::string("pass") : "x" + std::to_string(m.var);
  }
  return out;
}

// ---- solve / game-number / formula-solve ------------------------------------

struct SolveArgs {
  std::string graph, variant = "alice-start,free", prefix;
  int k = 0;
  std::uint64_t budget = 0;
  int k_min = 1, k_max = 0;
  std::string formula, passer = "none";
};

int cmd_solve(const SolveArgs& a) {
  const LoadedGraph lg = load_graph(a.graph);
  if (a.k < 1) throw InputError("--k must be at least 1");
  const Variant v = read_variant(lg.graph, a.variant, a.k);
  const ForcedPrefix prefix = parse_prefix(lg.graph, a.prefix);
  SolveOptions opts;
  opts.node_budget = a.budget;
  const SolveResult r = solve(lg.graph, v, prefix, opts);
  std::cout << "winner=" << to_string(r.winner)
            << " first_moves=" << moves_text(lg.graph, r.winning_root_moves) << " k=" << r.k
            << " nodes=" << r.nodes << "\n";
  return kOk;
}

int cmd_game_number(const SolveArgs& a) {
  const LoadedGraph lg = load_graph(a.graph);
  const int k_max = a.k_max > 0 ? a.k_max : std::max(1, lg.graph.num_vertices());
  if (a.k_min < 1 || k_max < a.k_min) throw InputError("bad k range");
  const Variant v = read_variant(lg.graph, a.variant, a.k_min);
  SolveOptions opts;
  opts.node_budget = a.budget;
  const GameNumberReport r = game_number(lg.graph, v, a.k_min, k_max, opts);
  for (const auto& [k, w] : r.winners) std::cout << "k=" << k << " winner=" << to_string(w) << "\n";
  std::cout << "game_number=" << (r.min_alice_k ? std::to_string(*r.min_alice_k) : "none")
            << "\n";
  return kOk;
}

int cmd_formula_solve(const SolveArgs& a) {
  const PosFormula f = load_formula(a.formula);
  const FormulaSolveResult r = solve_formula_game(f, read_side(a.passer));
  std::cout << "winner=" << to_string(r.winner)
            << " first_moves=" << formula_moves_text(r.winning_first_moves)
            << " nodes=" << r.nodes << "\n";
  return kOk;
}

// ---- reduce -----------------------------------------------------------------

struct ReduceArgs {
  std::string formula, graph, witness, out;
  int chi = 0, scale = 0;
  bool f3_w_joins_k = false;
};

Instance build_connected_from(const std::string& graph_path, int chi_arg,
                              const std::string& witness_path) {
  LoadedGraph lg = load_graph(graph_path);
  if (!witness_path.empty()) lg.witness = load_witness(witness_path, lg.graph.num_vertices());
  std::optional<int> chi = chi_arg > 0 ? std::optional<int>(chi_arg) : lg.chi;
  if (!lg.witness || !chi) {
    if (lg.graph.num_vertices() > kDefaultExactLimit)
      throw InputError("graph too large for exact coloring; give --chi and --witness");
    const ExactColoring ex = optimal_coloring(lg.graph);
    if (!chi) chi = ex.chromatic_number;
    if (!lg.witness) lg.witness = ex.coloring;
  }
  return build_connected_instance(lg.graph, *chi, *lg.witness);
}

int cmd_reduce(const std::string& kind, const ReduceArgs& a) {
  Instance inst;
  ReductionOptions opts;
  if (a.scale > 0) opts.scale_chi = a.scale;
  opts.gadget.f3_w_joins_k = a.f3_w_joins_k;
  if (kind == "gb" || kind == "greedy") {
    if (a.formula.empty()) throw InputError("--formula is required");
    const PosFormula f = load_formula(a.formula);
    inst = kind == "gb" ? build_gb_instance(f, opts) : build_greedy_instance(f, opts);
  } else {
    if (a.graph.empty()) throw InputError("--graph is required");
    inst = build_connected_from(a.graph, a.chi, a.witness);
  }
  if (a.out.empty()) {
    write_instance(std::cout, inst);
  } else {
    std::ofstream out(a.out);
    if (!out) throw InputError("cannot write '" + a.out + "'");
    write_instance(out, inst);
    std::cout << "kind=" << to_string(inst.kind) << " n=" << inst.graph.num_vertices()
              << " edges=" << inst.graph.num_edges() << " chi=" << inst.chi
              << " faithful=" << (inst.faithful ? "yes" : "no") << "\n";
  }
  return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  int k = 0;
  std::string formula, graph;
  int playouts = 100;
  std::uint64_t seed = 1;
  int scale = 0;
  std::uint64_t budget = 0;
};

bool report(bool ok, const std::string& what) {
  std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
  return ok;
}

int verify_f1(const VerifyArgs& a) {
  const int k = a.k > 0 ? a.k : 2;
  const Graph g = build_gadget(GadgetKind::kF1, k);
  const Variant v{Player::kBob, std::nullopt, Mode::kFree, k + 2};
  const ForcedPrefix prefix{Move::color_vertex(g.vertex("s"), 1)};
  SolveOptions opts;
  opts.node_budget = a.budget;
  const SolveResult r = solve(g, v, prefix, opts);
  const std::vector<Move> expect{Move::color_vertex(g.vertex("y"), 1)};
  bool ok = report(r.winner == Player::kAlice && r.winning_root_moves == expect,
                   "f1 k=" + std::to_string(k) + " winning replies to s:1 = {" +
                       moves_text(g, r.winning_root_moves) + "} nodes=" +
                       std::to_string(r.nodes));
  auto alice = gadget_strategy(GadgetStrategyKind::kAliceF1, g);
  const MatchResult m = play_vs_optimal(*alice, Player::kAlice, g, v, prefix, opts);
  ok = report(m.status == Status::kAliceWin, "f1 alice-f1 vs optimal Bob: " + to_string(m.status)) && ok;
  return ok ? kOk : kVerifyFailed;
}

int verify_f3(const VerifyArgs& a) {
  bool ok = true;
  const int lo = a.k > 0 ? a.k : 1, hi = a.k > 0 ? a.k : 4;
  for (int k = lo; k <= hi; ++k) {
    const Graph g = build_gadget(GadgetKind::kF3, k);
    const Variant v{Player::kBob, std::nullopt, Mode::kGreedy, k + 1};
    const Move s = Move::color_vertex(g.vertex("s"), 1);
    const SolveResult r = solve(g, v, {s});
    std::set<Vertex> verts;
    for (const Move& m : r.winning_root_moves) verts.insert(m.vertex);
    ok = report(r.winner == Player::kAlice && verts == std::set<Vertex>{g.vertex("y")},
                "f3 k=" + std::to_string(k) + " winning replies to s = {" +
                    moves_text(g, r.winning_root_moves) + "}") && ok;
    auto bob = gadget_strategy(GadgetStrategyKind::kBobF3, g);
    bool bob_ok = true;
    const GameState after = apply_move(g, GameState::initial(g, v), v, s);
    for (const Move& reply : legal_moves(g, after, v)) {
      if (reply.vertex == g.vertex("y")) continue;
      bob_ok = bob_ok &&
               check_strategy_exhaustively(*bob, Player::kBob, g, v, {s, reply}).always_wins;
    }
    ok = report(bob_ok, "f3 k=" + std::to_string(k) + " bob-f3 wins after every reply other than y") && ok;
  }
  return ok ? kOk : kVerifyFailed;
}

int verify_formula_playout(bool gb, const VerifyArgs& a) {
  if (a.formula.empty()) throw InputError("--formula is required");
  const PosFormula f = load_formula(a.formula);
  ReductionOptions opts;
  if (a.scale > 0) opts.scale_chi = a.scale;
  const Instance inst = gb ? build_gb_instance(f, opts) : build_greedy_instance(f, opts);
  const Variant v{Player::kBob, std::nullopt, gb ? Mode::kFree : Mode::kGreedy, inst.chi};
  const Player winner = player_of(solve_formula_game(f).winner, f.kind);
  ReductionStrategyKind kind;
  if (gb) kind = winner == Player::kBob ? ReductionStrategyKind::kBobGb : ReductionStrategyKind::kAliceGb;
  else kind = winner == Player::kBob ? ReductionStrategyKind::kBobGreedy : ReductionStrategyKind::kAliceGreedy;
  const auto scripted = reduction_strategy(kind, inst, solver_inner(f, winner));
  std::cout << "smoke test (heuristic opponents, not a proof): " << scripted->name() << " on n="
            << inst.graph.num_vertices() << " chi=" << inst.chi
            << (inst.faithful ? "" : " (scaled, no guarantee)") << "\n";
  int wins = 0, fallbacks = 0;
  const Status want = winner == Player::kAlice ? Status::kAliceWin : Status::kBobWin;
  for (int i = 0; i < a.playouts; ++i) {
    auto mine = scripted->clone();
    RandomLegalStrategy other(a.seed + static_cast<std::uint64_t>(i), 0.0);
    Strategy& alice = winner == Player::kAlice ? *mine : static_cast<Strategy&>(other);
    Strategy& bob = winner == Player::kAlice ? static_cast<Strategy&>(other) : *mine;
    if (arena(alice, bob, inst.graph, v).status == want) ++wins;
    if (!mine->fallback_log().empty()) ++fallbacks;
  }
  const bool ok = report(wins == a.playouts,
                         std::string(gb ? "gb-playout" : "greedy-playout") + " " +
                             to_string(winner) + " won " + std::to_string(wins) + "/" +
                             std::to_string(a.playouts) + " (seeds " + std::to_string(a.seed) +
                             ".." + std::to_string(a.seed + a.playouts - 1) + "), " +
                             std::to_string(fallbacks) + " with fallback");
  return ok ? kOk : kVerifyFailed;
}

int verify_connected(const VerifyArgs& a) {
  Instance inst;
  if (a.graph.empty()) {
    const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    inst = build_connected_instance(k3, 3, Coloring(std::vector<Color>{1, 2, 3}));
  } else {
    inst = build_connected_from(a.graph, 0, "");
  }
  const Graph& g = inst.graph;
  SolveOptions opts;
  opts.node_budget = a.budget;
  const Player base = solve(*inst.base_graph, base_variant(inst), {}, opts).winner;
  const Player at_chi =
      solve(g, Variant{Player::kAlice, std::nullopt, Mode::kConnected, inst.chi}, {}, opts).winner;
  bool ok = report(base == at_chi, "connected: base Bob-start winner with " +
                                       std::to_string(inst.base_chi) + " colors = " +
                                       to_string(base) + ", connected Alice-start winner with " +
                                       std::to_string(inst.chi) + " colors = " + to_string(at_chi));
  if (inst.chi > 1) {
    const Player below =
        solve(g, Variant{Player::kAlice, std::nullopt, Mode::kConnected, inst.chi - 1}, {}, opts)
            .winner;
    report(true, "connected: with " + std::to_string(inst.chi - 1) + " colors winner = " +
                     to_string(below) + " (informational)");
  }
  if (base == Player::kAlice) {
    ConnectedStrategy alice(ConnectedStrategyKind::kAliceConn, inst,
                            std::make_unique<OptimalStrategy>(*inst.base_graph,
                                                              base_variant(inst), opts));
    const MatchResult m = play_vs_optimal(
        alice, Player::kAlice, g, Variant{Player::kAlice, std::nullopt, Mode::kConnected, inst.chi},
        {}, opts);
    ok = report(m.status == Status::kAliceWin, "connected: alice-conn vs optimal Bob: " +
                                                   to_string(m.status)) && ok;
  }
  return ok ? kOk : kVerifyFailed;
}

// ---- play -------------------------------------------------------------------

struct PlayArgs {
  std::string graph, variant = "alice-start,free", as = "alice", opponent = "optimal";
  int k = 0;
  std::uint64_t budget = 0, seed = 1;
};

void show(const Graph& g, const GameState& st) {
  std::cout << "to_move=" << to_string(st.to_move) << " colored=" << st.coloring.num_colored()
            << "/" << g.num_vertices() << "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::cout << "  " << g.vertex_name(v) << " ";
    if (st.coloring.colored(v)) std::cout << st.coloring[v];
    else std::cout << "-";
    std::cout << "\n";
  }
}

int cmd_play(const PlayArgs& a) {
  const LoadedGraph lg = load_graph(a.graph);
  const Graph& g = lg.graph;
  if (a.k < 1) throw InputError("--k must be at least 1");
  const Variant v = read_variant(g, a.variant, a.k);
  Player human;
  if (a.as == "alice") human = Player::kAlice;
  else if (a.as == "bob") human = Player::kBob;
  else throw InputError("--as must be alice or bob");
  SolveOptions opts;
  opts.node_budget = a.budget;
  std::unique_ptr<Strategy> bot;
  if (a.opponent == "optimal") bot = std::make_unique<OptimalStrategy>(g, v, opts);
  else if (a.opponent == "lowest") bot = std::make_unique<LowestLegalStrategy>();
  else if (a.opponent == "random") bot = std::make_unique<RandomLegalStrategy>(a.seed);
  else throw InputError("--opponent must be optimal, lowest or random");

  GameState st = GameState::initial(g, v);
  Trace trace;
  Status result = Status::kOngoing;
  auto play = [&](const Move& m) {
    const GameState next = apply_move(g, st, v, m);
    trace.push_back({st.to_move, m});
    std::cout << to_string(st.to_move) << " " << format_move(m) << "\n";
    result = m.is_pass() ? status(g, next, v) : status_after(g, next, v, m.vertex);
    st = next;
  };
  auto bot_turns = [&] {
    while (result == Status::kOngoing && st.to_move != human) {
      try {
        play(bot->choose(g, v, st, trace));
      } catch (const BudgetExceeded&) {
        std::cout << "opponent search exceeded the budget; playing lowest legal move\n";
        LowestLegalStrategy lowest;
        play(lowest.choose(g, v, st, trace));
      }
    }
  };
  auto finished = [&] {
    if (result == Status::kOngoing) return false;
    std::cout << "result=" << to_string(result) << "\n";
    return true;
  };

  std::cout << "playing " << to_string(v) << " as " << to_string(human) << " against "
            << bot->name() << "\n";
  bot_turns();
  if (finished()) return kOk;
  for (std::string line; std::cout << "> " << std::flush, std::getline(std::cin, line);) {
    std::istringstream ls(line);
    std::string cmd;
    ls >> cmd;
    if (cmd.empty()) continue;
    if (cmd == "quit") break;
    if (cmd == "show") {
      show(g, st);
    } else if (cmd == "hint") {
      try {
        Solver solver(g, v, opts);
        const auto m = solver.winning_move(st);
        std::cout << "hint " << (m ? format_move(*m) : std::string("none (position lost)")) << "\n";
      } catch (const BudgetExceeded&) {
        std::cout << "hint unavailable: budget exceeded\n";
      }
    } else if (cmd == "move" || cmd == "pass") {
      Move m;
      try {
        m = parse_move(g, line);
      } catch (const std::invalid_argument& e) {
        std::cout << "error: " << e.what() << "\n";
        continue;
      }
      if (auto why = check_move(g, st, v, m)) {
        std::cout << "error: " << *why << "\n";
        continue;
      }
      play(m);
      if (finished()) return kOk;
      bot_turns();
      if (finished()) return kOk;
    } else {
      std::cout << "error: unknown command '" << cmd << "' (show, move <v> <c>, pass, hint, quit)\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph coloring games: solver, reductions and scripted strategies"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one game exactly");
  solve_cmd->add_option("--graph", sa.graph, "Graph file")->required();
  solve_cmd->add_option("--variant", sa.variant, "<starter>,<mode>[,pass=<player>]");
  solve_cmd->add_option("--k", sa.k, "Number of colors")->required();
  solve_cmd->add_option("--prefix", sa.prefix, "Forced opening, e.g. s:1,y:1");
  solve_cmd->add_option("--budget", sa.budget, "Node budget (0 = unlimited)");

  auto* gn_cmd = app.add_subcommand("game-number", "Winner for every k in a range");
  gn_cmd->add_option("--graph", sa.graph, "Graph file")->required();
  gn_cmd->add_option("--variant", sa.variant, "<starter>,<mode>[,pass=<player>]");
  gn_cmd->add_option("--k-min", sa.k_min, "Least k (default 1)");
  gn_cmd->add_option("--k-max", sa.k_max, "Largest k (default n)");
  gn_cmd->add_option("--budget", sa.budget, "Node budget per k (0 = unlimited)");

  auto* fs_cmd = app.add_subcommand("formula-solve", "Solve a positive formula game");
  fs_cmd->add_option("--formula", sa.formula, "Formula file")->required();
  fs_cmd->add_option("--passer", sa.passer, "none, I or II");

  ReduceArgs ra;
  std::string reduce_kind;
  auto* red_cmd = app.add_subcommand("reduce", "Build a reduction instance with certificate");
  red_cmd->add_option("kind", reduce_kind, "gb, greedy or connected")
      ->required()
      ->check(CLI::IsMember({"gb", "greedy", "connected"}));
  red_cmd->add_option("--formula", ra.formula, "Formula file (gb, greedy)");
  red_cmd->add_option("--graph", ra.graph, "Graph file (connected)");
  red_cmd->add_option("--chi", ra.chi, "Chromatic number of the input graph (connected)");
  red_cmd->add_option("--witness", ra.witness, "File with witness-color lines (connected)");
  red_cmd->add_option("--scale", ra.scale, "Override the instance chromatic number (not faithful)");
  red_cmd->add_flag("--f3-w-joins-k", ra.f3_w_joins_k, "Join w to K in the F3 gadget");
  red_cmd->add_option("--out", ra.out, "Output file (default stdout)");

  VerifyArgs va;
  std::string verify_kind;
  auto* ver_cmd = app.add_subcommand("verify", "Run one verification suite");
  ver_cmd->add_option("check", verify_kind, "f1, f3, gb-playout, greedy-playout or connected")
      ->required()
      ->check(CLI::IsMember({"f1", "f3", "gb-playout", "greedy-playout", "connected"}));
  ver_cmd->add_option("--k", va.k, "Gadget clique size");
  ver_cmd->add_option("--formula", va.formula, "Formula file (playout checks)");
  ver_cmd->add_option("--graph", va.graph, "Graph file (connected; default K3)");
  ver_cmd->add_option("--playouts", va.playouts, "Number of playouts")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--seed", va.seed, "First opponent seed");
  ver_cmd->add_option("--scale", va.scale, "Override the instance chromatic number");
  ver_cmd->add_option("--budget", va.budget, "Node budget (0 = unlimited)");

  PlayArgs pa;
  auto* play_cmd = app.add_subcommand("play", "Interactive game against a strategy");
  play_cmd->add_option("--graph", pa.graph, "Graph file")->required();
  play_cmd->add_option("--variant", pa.variant, "<starter>,<mode>[,pass=<player>]");
  play_cmd->add_option("--k", pa.k, "Number of colors")->required();
  play_cmd->add_option("--as", pa.as, "alice or bob");
  play_cmd->add_option("--opponent", pa.opponent, "optimal, lowest or random");
  play_cmd->add_option("--seed", pa.seed, "Seed for the random opponent");
  play_cmd->add_option("--budget", pa.budget, "Node budget for solver moves and hints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(sa);
    if (*gn_cmd) return cmd_game_number(sa);
    if (*fs_cmd) return cmd_formula_solve(sa);
    if (*red_cmd) return cmd_reduce(reduce_kind, ra);
    if (*ver_cmd) {
      if (verify_kind == "f1") return verify_f1(va);
      if (verify_kind == "f3") return verify_f3(va);
      if (verify_kind == "gb-playout") return verify_formula_playout(true, va);
      if (verify_kind == "greedy-playout") return verify_formula_playout(false, va);
      return verify_connected(va);
    }
    if (*play_cmd) return cmd_play(pa);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
