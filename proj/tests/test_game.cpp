#include <doctest.h>

#include <vector>

#include "nasheq/errors.hpp"
#include "nasheq/game.hpp"
#include "nasheq/groebner.hpp"

using namespace nasheq;

namespace {

// Three players with two strategies each. The interior equilibrium is
// (3/5, 1/2, 1/3) in each player's first-strategy weight, found by hand:
// player 1 is indifferent iff 2yz + 6y + 2z = 4, player 2 iff
// 13xz/2 + 27/2 = 18x + 12z, player 3 iff 6x + 6y = 2xy + 6.
RawGame crossing_game() {
  RawGame raw;
  raw.players = 3;
  raw.strategy_counts = {2, 2, 2};
  raw.entries = {
      {{1, 1, 1}, {"6", "-1", "4"}},    {{1, 2, 1}, {"0", "9", "0"}},
      {{2, 1, 1}, {"0", "3/2", "0"}},   {{2, 2, 1}, {"2", "0", "0"}},
      {{1, 1, 2}, {"2", "0", "0"}},     {{1, 2, 2}, {"0", "9/2", "0"}},
      {{2, 1, 2}, {"0", "27/2", "0"}},  {{2, 2, 2}, {"4", "0", "6"}},
  };
  return raw;
}

}  // namespace

TEST_SUITE("game") {
  TEST_CASE("a complete payoff table validates and stores exact entries") {
    const Game game = validate_game(crossing_game());
    CHECK(game.players() == 3);
    CHECK(game.strategy_counts() == std::vector<int>{2, 2, 2});
    CHECK(game.total_strategies() == 6);
    CHECK(game.profile_count() == 8);
    CHECK(game.payoff(0, {0, 0, 0}) == Rat(6));
    CHECK(game.payoff(1, {0, 0, 0}) == Rat(-1));
    CHECK(game.payoff(1, {1, 0, 1}) == Rat(27, 2));
    CHECK(game.payoff(2, {1, 1, 1}) == Rat(6));
    CHECK(game.payoff(2, {0, 1, 0}) == Rat(0));
  }

  TEST_CASE("incomplete or inconsistent tables are rejected") {
    SUBCASE("too few players") {
      RawGame raw = crossing_game();
      raw.players = 1;
      raw.strategy_counts = {2};
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("strategy count list does not match the player count") {
      RawGame raw = crossing_game();
      raw.strategy_counts = {2, 2};
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("a player with a single strategy") {
      RawGame raw = crossing_game();
      raw.strategy_counts = {2, 1, 2};
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("profile of the wrong length") {
      RawGame raw = crossing_game();
      raw.entries[0].profile = {1, 1};
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("strategy index out of range") {
      RawGame raw = crossing_game();
      raw.entries[0].profile = {1, 3, 1};
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("duplicate profile") {
      RawGame raw = crossing_game();
      raw.entries[1].profile = raw.entries[0].profile;
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("missing profile") {
      RawGame raw = crossing_game();
      raw.entries.pop_back();
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("wrong number of payoff values") {
      RawGame raw = crossing_game();
      raw.entries[0].values = {"6", "-1"};
      CHECK_THROWS_AS(validate_game(raw), InvalidGame);
    }
    SUBCASE("payoff that is not an exact rational") {
      RawGame raw = crossing_game();
      raw.entries[0].values = {"6.5", "-1", "4"};
      CHECK_THROWS_AS(validate_game(raw), NonRationalPayoff);
      raw.entries[0].values = {"six", "-1", "4"};
      CHECK_THROWS_AS(validate_game(raw), NonRationalPayoff);
    }
  }

  TEST_CASE("payoff polynomials reproduce the table on pure profiles") {
    const Game game = validate_game(crossing_game());
    const VarOrderPtr order = full_variable_order(game);
    REQUIRE(order->size() == 6);
    // Later players come first; within a player higher strategies first.
    CHECK(order->name(0) == "x3_2");
    CHECK(order->name(5) == "x1_1");

    std::vector<MPoly> alpha;
    for (int player = 0; player < 3; ++player) {
      alpha.push_back(expected_payoff(game, player, order));
    }

    for (int s1 = 0; s1 < 2; ++s1) {
      for (int s2 = 0; s2 < 2; ++s2) {
        for (int s3 = 0; s3 < 2; ++s3) {
          const std::vector<int> profile = {s1, s2, s3};
          std::vector<Rat> point(order->size(), Rat(0));
          for (int p = 0; p < 3; ++p) {
            point[*order->index_of(strategy_var_name(p, profile[p]))] = Rat(1);
          }
          for (int player = 0; player < 3; ++player) {
            CHECK(alpha[player].evaluate_rational(point) ==
                  game.payoff(player, profile));
            // Deviating to the strategy already played changes nothing.
            const MPoly dev = pure_deviation_payoff(game, player,
                                                    profile[player], order);
            CHECK(dev.evaluate_rational(point) == game.payoff(player, profile));
          }
        }
      }
    }
  }

  TEST_CASE("deviation payoffs agree at the known interior equilibrium") {
    const Game game = validate_game(crossing_game());
    const VarOrderPtr order = full_variable_order(game);
    // (x3_2, x3_1, x2_2, x2_1, x1_2, x1_1) at the equilibrium.
    const std::vector<Rat> point = {Rat(2, 3), Rat(1, 3), Rat(1, 2),
                                    Rat(1, 2), Rat(2, 5), Rat(3, 5)};
    const std::vector<Rat> value = {Rat(5, 3), Rat(18, 5), Rat(6, 5)};
    for (int player = 0; player < 3; ++player) {
      for (int strategy = 0; strategy < 2; ++strategy) {
        const MPoly dev = pure_deviation_payoff(game, player, strategy, order);
        CHECK(dev.evaluate_rational(point) == value[player]);
      }
      CHECK(expected_payoff(game, player, order).evaluate_rational(point) ==
            value[player]);
    }
  }

  TEST_CASE("the reduced system matches hand-expanded indifference conditions") {
    const Game game = validate_game(crossing_game());
    const GameSystem reduced = reduced_game_system(game);
    REQUIRE(reduced.order->size() == 3);
    CHECK(reduced.order->name(0) == "x3_1");
    CHECK(reduced.order->name(1) == "x2_1");
    CHECK(reduced.order->name(2) == "x1_1");
    REQUIRE(reduced.equations.size() == 3);
    for (const EquationInfo& info : reduced.info) {
      CHECK(info.kind == EquationKind::Indifference);
      CHECK(info.strategy == 1);
    }

    // Shorthand: z = x3_1, y = x2_1, x = x1_1 (each player's first weight).
    const auto mono = [](std::uint32_t z, std::uint32_t y, std::uint32_t x) {
      return Monomial({z, y, x});
    };
    const MPoly p1 = MPoly::from_terms(
        reduced.order, {{mono(1, 1, 0), Rat(2)},
                        {mono(0, 1, 0), Rat(6)},
                        {mono(1, 0, 0), Rat(2)},
                        {mono(0, 0, 0), Rat(-4)}});
    const MPoly p2 = MPoly::from_terms(
        reduced.order, {{mono(1, 0, 1), Rat(13, 2)},
                        {mono(0, 0, 1), Rat(-18)},
                        {mono(1, 0, 0), Rat(-12)},
                        {mono(0, 0, 0), Rat(27, 2)}});
    const MPoly p3 = MPoly::from_terms(
        reduced.order, {{mono(0, 1, 1), Rat(-2)},
                        {mono(0, 0, 1), Rat(6)},
                        {mono(0, 1, 0), Rat(6)},
                        {mono(0, 0, 0), Rat(-6)}});
    CHECK(reduced.equations[0] == p1);
    CHECK(reduced.equations[1] == p2);
    CHECK(reduced.equations[2] == p3);
    CHECK(reduced.equations[0].to_string() ==
          "2*x3_1*x2_1 + 2*x3_1 + 6*x2_1 - 4");
  }

  TEST_CASE("the full system triangularizes to a line over x1_1") {
    const Game game = validate_game(crossing_game());
    const GameSystem system = build_game_system(game);
    REQUIRE(system.equations.size() == 6);
    int indifference = 0;
    int simplex = 0;
    for (const EquationInfo& info : system.info) {
      (info.kind == EquationKind::Indifference ? indifference : simplex) += 1;
    }
    CHECK(indifference == 3);
    CHECK(simplex == 3);
    CHECK(system.var_owner[*system.order->index_of("x2_2")] ==
          std::pair<int, int>(1, 1));

    const GroebnerBasis gb = buchberger(system.equations, system.order);
    CHECK(gb.zero_dimensional);
    CHECK_FALSE(gb.inconsistent);
    REQUIRE(gb.shape.has_value());
    const ShapeForm& shape = *gb.shape;
    CHECK(shape.primitive_variable == *system.order->index_of("x1_1"));

    // Eliminating everything but x1_1 leaves 235 t^2 - 531 t + 234, whose
    // roots are 3/5 and 78/47; only the first stays inside the simplex.
    CHECK(shape.eliminant ==
          UPoly({Rat(234, 235), Rat(-531, 235), Rat(1)}));

    // Every other weight is an affine function of x1_1 on the variety.
    const std::vector<std::pair<std::string, UPoly>> lines = {
        {"x1_2", UPoly({Rat(1), Rat(-1)})},
        {"x2_1", UPoly({Rat(34, 21), Rat(-235, 126)})},
        {"x2_2", UPoly({Rat(-13, 21), Rat(235, 126)})},
        {"x3_1", UPoly({Rat(49, 6), Rat(-235, 18)})},
        {"x3_2", UPoly({Rat(-43, 6), Rat(235, 18)})},
    };
    REQUIRE(shape.coordinate_map.size() == lines.size());
    for (const auto& [name, expected] : lines) {
      const std::size_t index = *system.order->index_of(name);
      REQUIRE(shape.coordinate_map.count(index) == 1);
      CHECK(shape.coordinate_map.at(index) == expected);
    }

    // At the rational root 3/5 the maps give the equilibrium and every
    // original equation vanishes.
    const Rat root(3, 5);
    CHECK(shape.eliminant.evaluate(root) == Rat(0));
    std::vector<Rat> point(system.order->size(), Rat(0));
    point[shape.primitive_variable] = root;
    for (const auto& [index, line] : shape.coordinate_map) {
      point[index] = line.evaluate(root);
    }
    CHECK(point[*system.order->index_of("x2_1")] == Rat(1, 2));
    CHECK(point[*system.order->index_of("x3_1")] == Rat(1, 3));
    CHECK(point[*system.order->index_of("x1_2")] == Rat(2, 5));
    for (const MPoly& equation : system.equations) {
      CHECK(equation.evaluate_rational(point) == Rat(0));
    }
  }

  TEST_CASE("variable orders must cover exactly the game's strategy weights") {
    const Game game = validate_game(crossing_game());
    CHECK_THROWS_AS(
        build_game_system(game, make_order({"x1_1", "x1_2", "x2_1"})),
        OrderMismatch);
    CHECK_THROWS_AS(
        build_game_system(game, make_order({"a", "b", "c", "d", "e", "f"})),
        OrderMismatch);
    // A permutation of the right names is accepted.
    const VarOrderPtr custom = make_order(
        {"x1_1", "x1_2", "x2_1", "x2_2", "x3_1", "x3_2"});
    const GameSystem system = build_game_system(game, custom);
    CHECK(system.order == custom);
  }
}
