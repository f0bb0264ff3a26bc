#include "nasheq/game.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "nasheq/errors.hpp"

namespace nasheq {

int Game::total_strategies() const {
  int total = 0;
  for (int k : strategy_counts_) total += k;
  return total;
}

std::size_t Game::profile_count() const {
  std::size_t count = 1;
  for (int k : strategy_counts_) count *= static_cast<std::size_t>(k);
  return count;
}

std::size_t Game::flat_index(const std::vector<int>& profile) const {
  std::size_t index = 0;
  for (std::size_t p = 0; p < strategy_counts_.size(); ++p) {
    index = index * static_cast<std::size_t>(strategy_counts_[p]) +
            static_cast<std::size_t>(profile[p]);
  }
  return index;
}

const Rat& Game::payoff(int player, const std::vector<int>& profile) const {
  if (profile.size() != strategy_counts_.size()) {
    throw InvalidGame("profile length does not match player count");
  }
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (profile[p] < 0 || profile[p] >= strategy_counts_[p]) {
      throw InvalidGame("strategy index out of range in payoff lookup");
    }
  }
  return payoffs_[flat_index(profile)].at(static_cast<std::size_t>(player));
}

Game validate_game(const RawGame& raw) {
  if (raw.players < 2) {
    throw InvalidGame("a game needs at least two players");
  }
  if (static_cast<int>(raw.strategy_counts.size()) != raw.players) {
    throw InvalidGame("strategy count list does not match player count");
  }
  for (int k : raw.strategy_counts) {
    if (k < 2) {
      throw InvalidGame("every player needs at least two strategies");
    }
  }

  Game game;
  game.strategy_counts_ = raw.strategy_counts;
  const std::size_t profiles = game.profile_count();
  game.payoffs_.assign(profiles, {});

  std::set<std::vector<int>> seen;
  for (const PayoffEntry& entry : raw.entries) {
    if (static_cast<int>(entry.profile.size()) != raw.players) {
      throw InvalidGame("payoff entry profile length does not match players");
    }
    std::vector<int> profile0(entry.profile.size());
    for (std::size_t p = 0; p < entry.profile.size(); ++p) {
      const int s = entry.profile[p];
      if (s < 1 || s > raw.strategy_counts[p]) {
        throw InvalidGame("strategy index out of range in payoff entry");
      }
      profile0[p] = s - 1;
    }
    if (!seen.insert(profile0).second) {
      throw InvalidGame("duplicate payoff entry for a strategy profile");
    }
    if (static_cast<int>(entry.values.size()) != raw.players) {
      throw InvalidGame("payoff entry value count does not match players");
    }
    std::vector<Rat> values;
    values.reserve(entry.values.size());
    for (const std::string& text : entry.values) {
      try {
        values.push_back(rat_from_string(text));
      } catch (const ParseError&) {
        throw NonRationalPayoff("payoff value '" + text +
                                "' is not an exact rational");
      }
    }
    game.payoffs_[game.flat_index(profile0)] = std::move(values);
  }
  if (seen.size() != profiles) {
    throw InvalidGame("payoff table is missing strategy profiles");
  }
  return game;
}

std::string strategy_var_name(int player, int strategy) {
  return "x" + std::to_string(player + 1) + "_" + std::to_string(strategy + 1);
}

VarOrderPtr full_variable_order(const Game& game) {
  std::vector<std::string> names;
  for (int player = game.players() - 1; player >= 0; --player) {
    for (int strategy = game.strategies(player) - 1; strategy >= 0;
         --strategy) {
      names.push_back(strategy_var_name(player, strategy));
    }
  }
  return make_order(names);
}

namespace {

// Iterates all pure profiles (0-based), calling fn(profile).
template <typename Fn>
void for_each_profile(const std::vector<int>& counts, Fn&& fn) {
  std::vector<int> profile(counts.size(), 0);
  while (true) {
    fn(profile);
    std::size_t p = counts.size();
    while (p > 0) {
      --p;
      if (++profile[p] < counts[p]) break;
      profile[p] = 0;
      if (p == 0) return;
    }
  }
}

std::size_t require_var(const VarOrderPtr& order, int player, int strategy) {
  const std::string name = strategy_var_name(player, strategy);
  const std::optional<std::size_t> index = order->index_of(name);
  if (!index) {
    throw OrderMismatch("variable order is missing " + name);
  }
  return *index;
}

}  // namespace

MPoly expected_payoff(const Game& game, int player, const VarOrderPtr& order) {
  std::vector<Term> terms;
  for_each_profile(game.strategy_counts(), [&](const std::vector<int>& s) {
    const Rat& value = game.payoff(player, s);
    if (value == 0) return;
    std::vector<std::uint32_t> exponents(order->size(), 0);
    for (std::size_t p = 0; p < s.size(); ++p) {
      exponents[require_var(order, static_cast<int>(p), s[p])] += 1;
    }
    terms.push_back({Monomial(std::move(exponents)), value});
  });
  return MPoly::from_terms(order, terms);
}

MPoly pure_deviation_payoff(const Game& game, int player, int strategy,
                            const VarOrderPtr& order) {
  if (strategy < 0 || strategy >= game.strategies(player)) {
    throw InvalidGame("deviation strategy out of range");
  }
  std::vector<Term> terms;
  for_each_profile(game.strategy_counts(), [&](const std::vector<int>& s) {
    if (s[static_cast<std::size_t>(player)] != strategy) return;
    const Rat& value = game.payoff(player, s);
    if (value == 0) return;
    std::vector<std::uint32_t> exponents(order->size(), 0);
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (static_cast<int>(p) == player) continue;
      exponents[require_var(order, static_cast<int>(p), s[p])] += 1;
    }
    terms.push_back({Monomial(std::move(exponents)), value});
  });
  return MPoly::from_terms(order, terms);
}

GameSystem build_game_system(const Game& game, VarOrderPtr order) {
  if (!order) order = full_variable_order(game);
  // The order must contain exactly the strategy variables of this game.
  if (order->size() != static_cast<std::size_t>(game.total_strategies())) {
    throw OrderMismatch("variable order size does not match the game");
  }

  GameSystem system;
  system.order = order;
  system.var_owner.assign(order->size(), {-1, -1});
  for (int player = 0; player < game.players(); ++player) {
    for (int strategy = 0; strategy < game.strategies(player); ++strategy) {
      system.var_owner[require_var(order, player, strategy)] = {player,
                                                                strategy};
    }
  }

  for (int player = 0; player < game.players(); ++player) {
    const MPoly anchor = pure_deviation_payoff(game, player, 0, order);
    for (int strategy = 1; strategy < game.strategies(player); ++strategy) {
      system.equations.push_back(
          anchor - pure_deviation_payoff(game, player, strategy, order));
      system.info.push_back({EquationKind::Indifference, player, strategy});
    }
  }
  for (int player = 0; player < game.players(); ++player) {
    MPoly simplex = MPoly::constant(order, Rat(-1));
    for (int strategy = 0; strategy < game.strategies(player); ++strategy) {
      simplex = simplex + MPoly::variable(order, require_var(order, player,
                                                             strategy));
    }
    system.equations.push_back(simplex);
    system.info.push_back({EquationKind::Simplex, player, 0});
  }
  return system;
}

GameSystem reduced_game_system(const Game& game) {
  std::vector<std::string> names;
  for (int player = game.players() - 1; player >= 0; --player) {
    for (int strategy = game.strategies(player) - 2; strategy >= 0;
         --strategy) {
      names.push_back(strategy_var_name(player, strategy));
    }
  }
  VarOrderPtr reduced = make_order(names);

  GameSystem full = build_game_system(game, full_variable_order(game));
  GameSystem system;
  system.order = reduced;
  system.var_owner.assign(reduced->size(), {-1, -1});
  for (int player = 0; player < game.players(); ++player) {
    for (int strategy = 0; strategy + 1 < game.strategies(player);
         ++strategy) {
      system.var_owner[require_var(reduced, player, strategy)] = {player,
                                                                  strategy};
    }
  }

  for (std::size_t e = 0; e < full.equations.size(); ++e) {
    if (full.info[e].kind != EquationKind::Indifference) continue;
    MPoly poly = full.equations[e];
    // Substitute each player's last weight by one minus the rest.
    for (int player = 0; player < game.players(); ++player) {
      const int last = game.strategies(player) - 1;
      MPoly rest = MPoly::constant(full.order, Rat(1));
      for (int strategy = 0; strategy < last; ++strategy) {
        rest = rest - MPoly::variable(
                          full.order, require_var(full.order, player, strategy));
      }
      poly = poly.substitute(require_var(full.order, player, last), rest);
    }
    system.equations.push_back(poly.reorder(reduced));
    system.info.push_back(full.info[e]);
  }
  return system;
}

}  // namespace nasheq
