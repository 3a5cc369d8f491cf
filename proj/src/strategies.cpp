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

#include "cgame/strategies.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cgame {

namespace {

bool legal(const Graph& g, const GameState& st, const Variant& var, Move m) {
  return !check_move(g, st, var, m).has_value();
}

// Least color v may legally take, skipping `exclude`.
std::optional<Color> lowest_color(const Graph& g, const GameState& st,
                                  const Variant& var, Vertex v,
                                  std::initializer_list<Color> exclude = {}) {
  if (st.coloring.colored(v)) return std::nullopt;
  auto skipped = [&](Color c) {
    return std::find(exclude.begin(), exclude.end(), c) != exclude.end();
  };
  if (var.mode == Mode::kGreedy) {
    Color c = greedy_color(g, st, v);
    if (skipped(c) || !legal(g, st, var, Move::color_vertex(v, c))) return std::nullopt;
    return c;
  }
  for (Color c = 1; c <= var.k; ++c) {
    if (!skipped(c) && legal(g, st, var, Move::color_vertex(v, c))) return c;
  }
  return std::nullopt;
}

std::optional<Move> color_with_lowest(const Graph& g, const GameState& st,
                                      const Variant& var, Vertex v,
                                      std::initializer_list<Color> exclude = {}) {
  if (auto c = lowest_color(g, st, var, v, exclude)) return Move::color_vertex(v, *c);
  return std::nullopt;
}

bool sees_color(const Graph& g, const GameState& st, Vertex v, Color c) {
  for (Vertex u : g.neighbors(v)) {
    if (st.coloring[u] == c) return true;
  }
  return false;
}

Move lowest_or_pass(const Graph& g, const Variant& var, const GameState& st) {
  return lowest_legal_move(g, st, var).value_or(Move::pass());
}

Vertex single(const Graph& g, const std::string& name) {
  const auto& vs = g.group(name);
  if (vs.size() != 1) throw std::invalid_argument("label " + name + " is not a single vertex");
  return vs.front();
}

struct GadgetRoles {
  Vertex s, w, y;
  std::vector<Vertex> K, Q;

  explicit GadgetRoles(const Graph& g)
      : s(single(g, "s")), w(single(g, "w")), y(single(g, "y")), K(g.group("K")) {
    if (g.has_group("Q")) Q = g.group("Q");
  }
};

// The F1 attack for Bob, or nullopt when the script has nothing to say.
std::optional<Move> bob_f1_move(const Graph& g, const Variant& var,
                                const GameState& st, const GadgetRoles& r) {
  const Coloring& c = st.coloring;
  if (!c.colored(r.s)) {
    if (c.num_colored() == 0) return color_with_lowest(g, st, var, r.s);
    return std::nullopt;
  }
  const Color a = c[r.s];
  if (c.colored(r.y) && c[r.y] != a && !c.colored(r.w)) {
    if (auto m = color_with_lowest(g, st, var, r.w, {c[r.y]})) return m;
  }
  if (c.colored(r.w) && !c.colored(r.y)) {
    if (auto m = color_with_lowest(g, st, var, r.y, {a, c[r.w]})) return m;
  }
  if (!c.colored(r.y) && !sees_color(g, st, r.y, a)) {
    for (Vertex q : r.Q) {
      if (legal(g, st, var, Move::color_vertex(q, a))) return Move::color_vertex(q, a);
    }
  }
  // (i)
  if (!c.colored(r.w)) {
    std::set<Color> in_k;
    for (Vertex v : r.K) in_k.insert(c[v]);
    std::set<Color> in_q;
    for (Vertex v : r.Q) {
      if (c.colored(v)) in_q.insert(c[v]);
    }
    for (Color x : in_q) {
      if (x != a && !in_k.count(x) && legal(g, st, var, Move::color_vertex(r.w, x))) {
        return Move::color_vertex(r.w, x);
      }
    }
  }
  // (iii)
  const auto around_y = sees(g, st, r.y);
  for (Vertex q : r.Q) {
    if (c.colored(q)) continue;
    for (Color x = 1; x <= var.k; ++x) {
      if (std::binary_search(around_y.begin(), around_y.end(), x)) continue;
      if (legal(g, st, var, Move::color_vertex(q, x))) return Move::color_vertex(q, x);
    }
  }
  std::vector<Vertex> f1 = {r.s, r.w, r.y};
  f1.insert(f1.end(), r.K.begin(), r.K.end());
  f1.insert(f1.end(), r.Q.begin(), r.Q.end());
  std::sort(f1.begin(), f1.end());
  for (Vertex v : f1) {
    if (auto m = color_with_lowest(g, st, var, v)) return m;
  }
  return std::nullopt;
}

class GadgetStrategy final : public Strategy {
 public:
  GadgetStrategy(GadgetStrategyKind kind, const Graph& g) : kind_(kind), roles_(g) {}

  std::string name() const override {
    switch (kind_) {
      case GadgetStrategyKind::kAliceF1: return "alice-f1";
      case GadgetStrategyKind::kBobF1: return "bob-f1";
      case GadgetStrategyKind::kBobF3: return "bob-f3";
    }
    return "?";
  }

  Move choose(const Graph& g, const Variant& var, const GameState& st,
              std::span<const TraceEntry> history) override {
    const Coloring& c = st.coloring;
    const GadgetRoles& r = roles_;
    switch (kind_) {
      case GadgetStrategyKind::kAliceF1: {
        if (c.colored(r.s) && !c.colored(r.y) &&
            legal(g, st, var, Move::color_vertex(r.y, c[r.s]))) {
          return Move::color_vertex(r.y, c[r.s]);
        }
        if (c.colored(r.s) && c[r.y] == c[r.s]) return lowest_or_pass(g, var, st);
        return fallback(g, var, st, "s and y do not share a color");
      }
      case GadgetStrategyKind::kBobF1: {
        if (auto m = bob_f1_move(g, var, st, r)) return *m;
        return fallback(g, var, st, "no rule applies");
      }
      case GadgetStrategyKind::kBobF3: {
        if (c.num_colored() == 0) {
          if (auto m = color_with_lowest(g, st, var, r.s)) return *m;
        }
        if (c.colored(r.s) && !c.colored(r.y) && !c.colored(r.w) && history.size() >= 2) {
          if (auto m = color_with_lowest(g, st, var, r.w)) return *m;
        }
        if (c.colored(r.s) && c.colored(r.w) && c[r.y] != c[r.s]) {
          return lowest_or_pass(g, var, st);
        }
        return fallback(g, var, st, "opening not followed");
      }
    }
    return fallback(g, var, st, "unknown kind");
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<GadgetStrategy>(*this);
  }

 private:
  GadgetStrategyKind kind_;
  GadgetRoles roles_;
};

std::string twin_name(int clause, int literal, bool second) {
  return std::string(second ? "l''{" : "l'{") + std::to_string(clause) + "," +
         std::to_string(literal) + "}";
}

}  // namespace

std::unique_ptr<Strategy> gadget_strategy(GadgetStrategyKind kind, const Graph& g) {
  return std::make_unique<GadgetStrategy>(kind, g);
}

// ---------------------------------------------------------------------------

ReductionStrategy::ReductionStrategy(ReductionStrategyKind kind, const Instance& inst,
                                     std::unique_ptr<FormulaStrategy> inner)
    : kind_(kind), inst_(&inst) {
  const bool alice =
      kind == ReductionStrategyKind::kAliceGb || kind == ReductionStrategyKind::kAliceGreedy;
  player_ = alice ? Player::kAlice : Player::kBob;
  const InstanceKind expected = gb() ? InstanceKind::kGb : InstanceKind::kGreedy;
  if (inst.kind != expected || !inst.formula) {
    throw std::invalid_argument(name() + " needs a " + to_string(expected) + " instance");
  }
  const PosFormula& f = *inst.formula;
  side_ = side_of(player_, f.kind);
  if (!inner || inner->side() != side_) {
    throw std::invalid_argument(name() + ": inner strategy must play " + to_string(side_));
  }
  inner_ = pass_lift(std::move(inner));

  const Graph& g = inst.graph;
  const auto& xs = g.group("x");
  target_.assign(f.num_vars + 1, -1);
  for (int i = 1; i <= f.num_vars; ++i) {
    const Vertex x = xs[i - 1];
    near_var_[x] = i;
    choice_var_[x] = i;
    target_[i] = x;
    if (!gb()) {
      const Vertex bar = g.vertex("xbar#" + std::to_string(i));
      near_var_[bar] = i;
      choice_var_[bar] = i;
      if (alice) target_[i] = bar;
    }
  }
  for (int j = 1; j <= f.num_clauses(); ++j) {
    const auto& clause = f.clauses[j - 1];
    for (int k = 0; k <= static_cast<int>(clause.size()); ++k) {
      const Vertex a = g.vertex(twin_name(j, k, false));
      const Vertex b = g.vertex(twin_name(j, k, true));
      twin_of_[a] = b;
      twin_of_[b] = a;
      if (k == 0) {
        head_twin_clause_[a] = j;
        head_twin_clause_[b] = j;
      } else {
        near_var_[a] = clause[k - 1];
        near_var_[b] = clause[k - 1];
      }
    }
  }
}

ReductionStrategy::ReductionStrategy(const ReductionStrategy& other)
    : Strategy(other),
      kind_(other.kind_),
      inst_(other.inst_),
      player_(other.player_),
      side_(other.side_),
      inner_(other.inner_->clone()),
      phase_(other.phase_),
      truth_color_(other.truth_color_),
      formula_(other.formula_),
      history_(other.history_),
      inner_moves_(other.inner_moves_),
      seen_(other.seen_),
      near_var_(other.near_var_),
      choice_var_(other.choice_var_),
      target_(other.target_),
      twin_of_(other.twin_of_),
      head_twin_clause_(other.head_twin_clause_) {}

std::string ReductionStrategy::name() const {
  switch (kind_) {
    case ReductionStrategyKind::kAliceGb: return "alice-gb";
    case ReductionStrategyKind::kBobGb: return "bob-gb";
    case ReductionStrategyKind::kAliceGreedy: return "alice-greedy";
    case ReductionStrategyKind::kBobGreedy: return "bob-greedy";
  }
  return "?";
}

void ReductionStrategy::record(Side side, FormulaMove m) {
  const PosFormula& f = *inst_->formula;
  formula_ = apply(f, formula_, other(side_), m);
  history_.push_back({side, m});
}

std::optional<int> ReductionStrategy::unset_variable(const std::map<Vertex, int>& vars,
                                                     Vertex v) const {
  auto it = vars.find(v);
  if (it == vars.end()) return std::nullopt;
  if (formula_.assigned() & var_bit(it->second)) return std::nullopt;
  return it->second;
}

Move ReductionStrategy::playout(const Graph& g, const Variant& variant,
                                const GameState& state, const std::string& reason) {
  if (phase_ != Phase::kPlayout) {
    phase_ = Phase::kPlayout;
    if (!reason.empty()) return fallback(g, variant, state, reason);
  }
  return lowest_or_pass(g, variant, state);
}

Move ReductionStrategy::choose(const Graph& g, const Variant& variant,
                               const GameState& state,
                               std::span<const TraceEntry> history) {
  switch (phase_) {
    case Phase::kOpening:
      return opening(g, variant, state, history);
    case Phase::kFormula:
      return player_ == Player::kBob ? bob_turn(g, variant, state, history)
                                     : alice_turn(g, variant, state, history);
    case Phase::kGadget: {
      if (gb()) {
        if (auto m = bob_f1_move(g, variant, state, GadgetRoles(g))) return *m;
        return fallback(g, variant, state, "no gadget rule applies");
      }
      const Vertex w = single(g, "w");
      if (auto m = color_with_lowest(g, state, variant, w)) return *m;
      return playout(g, variant, state, "");
    }
    case Phase::kRecolored:
      return recolored_turn(g, variant, state, history);
    case Phase::kPlayout:
      return playout(g, variant, state, "");
  }
  return fallback(g, variant, state, "unknown phase");
}

Move ReductionStrategy::opening(const Graph& g, const Variant& variant,
                                const GameState& state,
                                std::span<const TraceEntry> history) {
  const Vertex s = single(g, "s");
  const Vertex y = single(g, "y");
  const Coloring& c = state.coloring;

  if (player_ == Player::kBob) {
    if (c.num_colored() == 0) {
      if (auto m = color_with_lowest(g, state, variant, s)) return *m;
    }
    if (history.size() >= 2 && history[0].player == Player::kBob &&
        history[0].move.vertex == s) {
      const Move reply = history[1].move;
      seen_ = 2;
      if (reply.vertex == y && reply.color == c[s]) {
        truth_color_ = c[s];
        phase_ = Phase::kFormula;
        return bob_turn(g, variant, state, history);
      }
      phase_ = Phase::kGadget;
      return choose(g, variant, state, history);
    }
    return playout(g, variant, state, "game did not open with s");
  }

  // Alice, answering Bob's opening.
  if (history.size() == 1 && history[0].player == Player::kBob) {
    const Move first = history[0].move;
    if (first.vertex == s || first.vertex == y) {
      const Vertex other_end = first.vertex == s ? y : s;
      const Move m = variant.mode == Mode::kGreedy
                         ? color_with_lowest(g, state, variant, other_end).value_or(Move::pass())
                         : Move::color_vertex(other_end, first.color);
      if (!m.is_pass() && m.color == first.color && legal(g, state, variant, m)) {
        truth_color_ = first.color;
        phase_ = Phase::kFormula;
        seen_ = 2;
        return m;
      }
      return playout(g, variant, state, "cannot match the color of s");
    }
    if (first.is_pass()) return playout(g, variant, state, "Bob passed first");
    if (variant.mode == Mode::kGreedy) {
      phase_ = Phase::kFormula;
      seen_ = 2;
      if (auto m = color_with_lowest(g, state, variant, y)) {
        truth_color_ = m->color;
        return *m;
      }
      return playout(g, variant, state, "y cannot be colored");
    }
    if (auto m = color_with_lowest(g, state, variant, y, {first.color})) return *m;
    return playout(g, variant, state, "y cannot be colored");
  }
  if (history.size() == 3 && history[1].player == Player::kAlice &&
      history[1].move.vertex == y) {
    const Color alt = c[y];
    const Move second = history[2].move;
    if (second.vertex == s && second.color == alt) {
      truth_color_ = alt;
      phase_ = Phase::kFormula;
      seen_ = 3;
      return alice_turn(g, variant, state, history);
    }
    phase_ = Phase::kRecolored;
    const Move m = Move::color_vertex(single(g, "w"), alt);
    if (legal(g, state, variant, m)) return m;
    return recolored_turn(g, variant, state, history);
  }
  return playout(g, variant, state, "unscripted opening");
}

Move ReductionStrategy::bob_turn(const Graph& g, const Variant& variant,
                                 const GameState& state,
                                 std::span<const TraceEntry> history) {
  const PosFormula& f = *inst_->formula;
  const Side them = other(side_);
  for (; seen_ < history.size(); ++seen_) {
    const TraceEntry& e = history[seen_];
    if (e.player == player_ || finished(f, formula_)) continue;
    if (formula_.to_move != them) return playout(g, variant, state, "formula turns out of step");
    const auto var = e.move.is_pass() ? std::nullopt : unset_variable(near_var_, e.move.vertex);
    record(them, var ? FormulaMove{*var} : FormulaMove::pass());
  }
  if (finished(f, formula_)) return playout(g, variant, state, "");
  if (formula_.to_move == them) record(them, FormulaMove::pass());
  if (finished(f, formula_)) return playout(g, variant, state, "");

  const FormulaMove fm = inner_->choose(f, formula_, history_);
  if (fm.is_pass()) return playout(g, variant, state, "inner strategy passed");
  inner_moves_.push_back(fm.var);
  const Vertex x = target_[fm.var];
  const Move m = variant.mode == Mode::kGreedy
                     ? color_with_lowest(g, state, variant, x).value_or(Move::pass())
                     : Move::color_vertex(x, truth_color_);
  if (m.is_pass() || m.color != truth_color_ || !legal(g, state, variant, m)) {
    return playout(g, variant, state, "variable vertex cannot take the color of s");
  }
  record(side_, fm);
  seen_ = history.size() + 1;
  return m;
}

Move ReductionStrategy::alice_turn(const Graph& g, const Variant& variant,
                                   const GameState& state,
                                   std::span<const TraceEntry> history) {
  const PosFormula& f = *inst_->formula;
  const Side them = other(side_);
  if (finished(f, formula_)) return playout(g, variant, state, "");
  if (formula_.to_move == them) {
    const Move last = !history.empty() && history.back().player != player_
                          ? history.back().move
                          : Move::pass();
    auto var = last.is_pass() ? std::nullopt : unset_variable(choice_var_, last.vertex);
    if (var) {
      record(them, FormulaMove{*var});
    } else {
      auto twin = last.is_pass() ? twin_of_.end() : twin_of_.find(last.vertex);
      if (twin != twin_of_.end()) {
        if (auto m = color_with_lowest(g, state, variant, twin->second)) return *m;
      }
      record(them, FormulaMove::pass());
    }
    if (finished(f, formula_)) return playout(g, variant, state, "");
  }

  const FormulaMove fm = inner_->choose(f, formula_, history_);
  if (fm.is_pass()) return playout(g, variant, state, "inner strategy passed");
  inner_moves_.push_back(fm.var);
  const Vertex v = target_[fm.var];
  std::optional<Move> m =
      gb() ? color_with_lowest(g, state, variant, v, {truth_color_})
           : color_with_lowest(g, state, variant, v);
  if (!m) return playout(g, variant, state, "variable vertex unavailable");
  record(side_, fm);
  return *m;
}

Move ReductionStrategy::recolored_turn(const Graph& g, const Variant& variant,
                                       const GameState& state,
                                       std::span<const TraceEntry> history) {
  const Coloring& c = state.coloring;
  const Vertex s = single(g, "s");
  if (!c.colored(s)) {
    if (auto m = color_with_lowest(g, state, variant, s)) {
      truth_color_ = m->color;
      return *m;
    }
    return fallback(g, variant, state, "s cannot be colored");
  }
  truth_color_ = c[s];
  const Color sigma = truth_color_;
  if (!history.empty() && history.back().player != player_ && !history.back().move.is_pass()) {
    auto it = head_twin_clause_.find(history.back().move.vertex);
    if (it != head_twin_clause_.end()) {
      const auto& clique = inst_->conjunction_cliques[it->second - 1];
      const bool has_sigma =
          std::any_of(clique.begin(), clique.end(), [&](Vertex v) { return c[v] == sigma; });
      if (!has_sigma) {
        for (Vertex v : clique) {
          if (legal(g, state, variant, Move::color_vertex(v, sigma))) {
            return Move::color_vertex(v, sigma);
          }
        }
      }
    }
  }
  for (Vertex x : g.group("x")) {
    if (auto m = color_with_lowest(g, state, variant, x, {sigma})) return *m;
  }
  return fallback(g, variant, state, "no variable vertex left");
}

std::unique_ptr<ReductionStrategy> reduction_strategy(
    ReductionStrategyKind kind, const Instance& inst,
    std::unique_ptr<FormulaStrategy> inner) {
  return std::make_unique<ReductionStrategy>(kind, inst, std::move(inner));
}

std::unique_ptr<FormulaStrategy> solver_inner(const PosFormula& f, Player p) {
  return std::make_unique<SolverFormulaStrategy>(f, side_of(p, f.kind));
}

// ---------------------------------------------------------------------------

Variant base_variant(const Instance& inst) {
  return Variant{Player::kBob, std::nullopt, Mode::kFree, inst.base_chi};
}

ConnectedStrategy::ConnectedStrategy(ConnectedStrategyKind kind, const Instance& inst,
                                     std::unique_ptr<Strategy> inner)
    : kind_(kind), inst_(&inst), inner_(std::move(inner)) {
  if (inst.kind != InstanceKind::kConnected || !inst.base_graph) {
    throw std::invalid_argument(name() + " needs a connected-reduction instance");
  }
  if (!inner_) throw std::invalid_argument(name() + ": missing inner strategy");
  base_n_ = inst.base_graph->num_vertices();
}

ConnectedStrategy::ConnectedStrategy(const ConnectedStrategy& other)
    : Strategy(other),
      kind_(other.kind_),
      inst_(other.inst_),
      inner_(other.inner_->clone()),
      base_n_(other.base_n_) {}

std::string ConnectedStrategy::name() const {
  return kind_ == ConnectedStrategyKind::kAliceConn ? "alice-conn" : "bob-conn";
}

Move ConnectedStrategy::choose(const Graph& g, const Variant& variant,
                               const GameState& state,
                               std::span<const TraceEntry> history) {
  return kind_ == ConnectedStrategyKind::kAliceConn ? alice(g, variant, state, history)
                                                    : bob(g, variant, state, history);
}

std::optional<Move> ConnectedStrategy::gadget_move(const Graph& g, const Variant& variant,
                                                   const GameState& state, bool avoid_ys) {
  const Vertex y1 = single(g, "y1");
  const Vertex y2 = single(g, "y2");
  for (int pass = 0; pass < 2; ++pass) {
    for (Vertex v = base_n_; v < g.num_vertices(); ++v) {
      const bool is_y = v == y1 || v == y2;
      if (is_y && (avoid_ys || pass == 0)) continue;
      if (auto m = color_with_lowest(g, state, variant, v)) return m;
    }
    if (avoid_ys) break;
  }
  return std::nullopt;
}

std::optional<Move> ConnectedStrategy::inner_move(const Graph& g, const Variant& variant,
                                                  const GameState& state,
                                                  std::span<const TraceEntry> history) {
  const Vertex s = single(g, "s");
  if (!state.coloring.colored(s)) return std::nullopt;
  const Color sigma = state.coloring[s];
  auto down = [&](Color c) { return c < sigma ? c : c - 1; };
  auto up = [&](Color c) { return c < sigma ? c : c + 1; };

  const Graph& base = *inst_->base_graph;
  GameState inner_state{Coloring(base_n_), state.to_move};
  for (Vertex v = 0; v < base_n_; ++v) {
    const Color c = state.coloring[v];
    if (c != kNoColor) inner_state.coloring.set(v, down(c));
  }
  Trace inner_history;
  for (const TraceEntry& e : history) {
    if (!e.move.is_pass() && in_base(e.move.vertex)) {
      inner_history.push_back({e.player, Move::color_vertex(e.move.vertex, down(e.move.color))});
    }
  }
  const Move im = inner_->choose(base, base_variant(*inst_), inner_state, inner_history);
  if (im.is_pass() || !in_base(im.vertex)) return std::nullopt;
  const Move m = Move::color_vertex(im.vertex, up(im.color));
  if (!legal(g, state, variant, m)) return std::nullopt;
  return m;
}

Move ConnectedStrategy::alice(const Graph& g, const Variant& variant,
                              const GameState& state,
                              std::span<const TraceEntry> history) {
  const Coloring& c = state.coloring;
  const Vertex y1 = single(g, "y1");
  const Vertex y2 = single(g, "y2");
  if (c.num_colored() == 0) {
    if (auto m = color_with_lowest(g, state, variant, y1)) return *m;
  }
  if (c.colored(y1) && !c.colored(y2)) {
    const Move m = Move::color_vertex(y2, c[y1]);
    if (legal(g, state, variant, m)) return m;
  }
  const bool bob_in_base = !history.empty() && history.back().player != Player::kAlice &&
                           in_base(history.back().move.vertex);
  if (bob_in_base) {
    if (auto m = inner_move(g, variant, state, history)) return *m;
    return fallback(g, variant, state, "no inner reply in G");
  }
  if (auto m = gadget_move(g, variant, state, !c.colored(y2))) return *m;
  if (auto m = inner_move(g, variant, state, history)) return *m;
  return fallback(g, variant, state, "no move in the gadget or G");
}

Move ConnectedStrategy::bob(const Graph& g, const Variant& variant,
                            const GameState& state,
                            std::span<const TraceEntry> history) {
  const Coloring& c = state.coloring;
  const Vertex y1 = single(g, "y1");
  const Vertex y2 = single(g, "y2");
  const Vertex s = single(g, "s");
  if (c.colored(y1) != c.colored(y2)) {
    const Vertex done = c.colored(y1) ? y1 : y2;
    const Vertex open = c.colored(y1) ? y2 : y1;
    if (auto m = color_with_lowest(g, state, variant, open, {c[done]})) return *m;
  }
  const Move last = !history.empty() && history.back().player != Player::kBob
                        ? history.back().move
                        : Move::pass();
  if (last.vertex == y1 && !c.colored(s)) {
    if (auto m = color_with_lowest(g, state, variant, s)) return *m;
  }
  const auto& K = g.group("K");
  if (!last.is_pass() && std::find(K.begin(), K.end(), last.vertex) != K.end() &&
      !c.colored(y1)) {
    if (auto m = color_with_lowest(g, state, variant, y1)) return *m;
  }
  if (in_base(last.vertex)) {
    if (auto m = inner_move(g, variant, state, history)) return *m;
  }
  if (auto m = gadget_move(g, variant, state, true)) return *m;
  if (auto m = inner_move(g, variant, state, history)) return *m;
  return fallback(g, variant, state, "no move in the gadget or G");
}

std::unique_ptr<ConnectedStrategy> connected_strategy(
    ConnectedStrategyKind kind, const Instance& inst,
    std::unique_ptr<Strategy> inner) {
  return std::make_unique<ConnectedStrategy>(kind, inst, std::move(inner));
}

}  // namespace cgame
