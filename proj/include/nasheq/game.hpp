#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nasheq/multipoly.hpp"
#include "nasheq/rational.hpp"

namespace nasheq {

// Unvalidated game description as read from a file: strategy profiles are
// 1-based index vectors, payoffs are exact rational literals.
struct PayoffEntry {
  std::vector<int> profile;
  std::vector<std::string> values;
};

struct RawGame {
  int players = 0;
  std::vector<int> strategy_counts;
  std::vector<PayoffEntry> entries;
};

// A finite game in normal form with exact rational payoffs. Players and
// strategies are 0-based once inside the library.
class Game {
 public:
  int players() const { return static_cast<int>(strategy_counts_.size()); }
  const std::vector<int>& strategy_counts() const { return strategy_counts_; }
  int strategies(int player) const {
    return strategy_counts_.at(static_cast<std::size_t>(player));
  }
  // Total pure-strategy count across players (the variable count of the
  // full equilibrium system).
  int total_strategies() const;
  std::size_t profile_count() const;

  // Payoff to `player` at the pure profile (0-based strategies).
  const Rat& payoff(int player, const std::vector<int>& profile) const;

  friend Game validate_game(const RawGame& raw);

 private:
  std::vector<int> strategy_counts_;
  // payoffs_[flat profile][player]; profile flattened player-major with the
  // first player slowest.
  std::vector<std::vector<Rat>> payoffs_;

  std::size_t flat_index(const std::vector<int>& profile) const;
};

// Checks counts, ranges, duplicates, completeness, and payoff parsing.
// Throws InvalidGame or NonRationalPayoff.
Game validate_game(const RawGame& raw);

// Variable name for a (player, strategy) pair, both 0-based internally but
// rendered 1-based: player 0 strategy 0 -> "x1_1".
std::string strategy_var_name(int player, int strategy);

// Default precedence for the full system: later players first, higher
// strategies first, so the lex-least variable is x1_1.
VarOrderPtr full_variable_order(const Game& game);

// One polynomial per equation of the equilibrium system, tagged with its
// origin so reports can name equations meaningfully.
enum class EquationKind { Indifference, Simplex };

struct EquationInfo {
  EquationKind kind;
  int player;    // 0-based
  int strategy;  // for Indifference: the deviating strategy (0-based, >= 1)
};

struct GameSystem {
  VarOrderPtr order;
  std::vector<MPoly> equations;
  std::vector<EquationInfo> info;
  // var_owner[i] = (player, strategy) owning variable i of `order`.
  std::vector<std::pair<int, int>> var_owner;
};

// Expected payoff of `player` as a polynomial in all strategy weights.
MPoly expected_payoff(const Game& game, int player, const VarOrderPtr& order);

// Expected payoff of `player` when unilaterally playing pure `strategy`
// while everyone else keeps their mixed weights: a polynomial in the other
// players' variables only.
MPoly pure_deviation_payoff(const Game& game, int player, int strategy,
                            const VarOrderPtr& order);

// The full square system over all strategy-weight variables:
//  - per player, each pure strategy's payoff equals strategy 1's payoff
//    (indifference; strategies 2..k against the first), and
//  - per player, the weights sum to one (simplex).
// Interior positivity is NOT part of the system; candidates are filtered
// afterwards.
GameSystem build_game_system(const Game& game, VarOrderPtr order = nullptr);

// The same indifference content with each player's last weight eliminated
// via the simplex relation: a smaller system useful for inspection and
// cross-checking. Variables keep their names; the last strategy of each
// player disappears.
GameSystem reduced_game_system(const Game& game);

}  // namespace nasheq
