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

#ifndef CGAME_STRATEGY_HPP_
#define CGAME_STRATEGY_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

// A player policy. Strategies may keep private memory; an instance plays one
// game at a time. `history` holds every move made so far (including any
// forced prefix), oldest first.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;
  virtual Move choose(const Graph& g, const Variant& variant,
                      const GameState& state,
                      std::span<const TraceEntry> history) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;

  // Moves chosen by the fallback rule, with the reason, in order.
  const std::vector<std::string>& fallback_log() const { return fallbacks_; }

 protected:
  Strategy() = default;
  Strategy(const Strategy&) = default;
  Strategy& operator=(const Strategy&) = default;

  // Lowest legal (vertex, color) move, or a pass when nothing else is legal.
  Move fallback(const Graph& g, const Variant& variant, const GameState& state,
                const std::string& reason);

 private:
  std::vector<std::string> fallbacks_;
};

class LowestLegalStrategy final : public Strategy {
 public:
  std::string name() const override { return "lowest-legal"; }
  Move choose(const Graph& g, const Variant& variant, const GameState& state,
              std::span<const TraceEntry> history) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<LowestLegalStrategy>(*this);
  }
};

// Uniform over uncolored eligible vertices, then uniform over that vertex's
// legal colors. Passes with probability `pass_rate` when allowed.
class RandomLegalStrategy final : public Strategy {
 public:
  explicit RandomLegalStrategy(std::uint64_t seed, double pass_rate = 0.1)
      : rng_(seed), seed_(seed), pass_rate_(pass_rate) {}

  std::string name() const override {
    return "random-legal(seed=" + std::to_string(seed_) + ")";
  }
  Move choose(const Graph& g, const Variant& variant, const GameState& state,
              std::span<const TraceEntry> history) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<RandomLegalStrategy>(*this);
  }

 private:
  std::mt19937_64 rng_;
  std::uint64_t seed_;
  double pass_rate_;
};

class StrategyFailure : public std::runtime_error {
 public:
  StrategyFailure(const std::string& strategy, const Move& move,
                  const std::string& reason);
  const std::string& strategy() const { return strategy_; }
  const Move& move() const { return move_; }

 private:
  std::string strategy_;
  Move move_;
};

using ForcedPrefix = std::vector<Move>;

// Applies the prefix, alternating from the starter. Throws RuleViolation.
struct Replay {
  GameState state;
  Trace trace;
};
Replay replay(const Graph& g, const Variant& variant, const ForcedPrefix& prefix);

struct MatchResult {
  Status status = Status::kOngoing;
  Trace trace;
};

// Plays `alice` against `bob` from the prefix until the game is decided.
// Throws StrategyFailure on an illegal move.
MatchResult arena(Strategy& alice, Strategy& bob, const Graph& g,
                  const Variant& variant, const ForcedPrefix& prefix = {});

}  // namespace cgame

#endif  // CGAME_STRATEGY_HPP_
