#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "nasheq/errors.hpp"
#include "nasheq/gamefile.hpp"
#include "nasheq/runner.hpp"

using namespace nasheq;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

struct RunOutput {
  int code = -1;
  std::string out;
  std::string err;
};

RunOutput run_config(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  RunOutput result;
  result.code = run(config, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

RunConfig base_config(const std::string& file, SolveMethod method,
                      const std::string& format) {
  RunConfig config;
  config.input_path = fixture(file);
  config.method = method;
  config.output_format = format;
  return config;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("game files parse exactly") {
    const Game game = load_game_file(fixture("crossing.json"));
    CHECK(game.players() == 3);
    CHECK(game.strategy_counts() == std::vector<int>{2, 2, 2});
    CHECK(game.payoff(1, {1, 0, 0}) == Rat(3, 2));
    CHECK(game.payoff(2, {1, 1, 1}) == Rat(6));

    SUBCASE("rendering and reparsing preserves every payoff") {
      const Game again = parse_game_text(render_game(game));
      REQUIRE(again.players() == game.players());
      REQUIRE(again.strategy_counts() == game.strategy_counts());
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          for (int c = 0; c < 2; ++c) {
            for (int p = 0; p < 3; ++p) {
              CHECK(again.payoff(p, {a, b, c}) == game.payoff(p, {a, b, c}));
            }
          }
        }
      }
    }

    SUBCASE("integer payoff literals are accepted") {
      const Game inline_game = parse_game_text(R"({
        "players": 2, "strategies": [2, 2],
        "payoffs": [
          {"profile": [1, 1], "values": [1, "-1"]},
          {"profile": [1, 2], "values": [-1, "1"]},
          {"profile": [2, 1], "values": [-1, "1"]},
          {"profile": [2, 2], "values": [1, "-1"]}
        ]})");
      CHECK(inline_game.payoff(0, {0, 0}) == Rat(1));
    }
  }

  TEST_CASE("malformed game files are rejected with context") {
    CHECK_THROWS_AS(load_game_file(fixture("bad_decimal.json")),
                    NonRationalPayoff);
    CHECK_THROWS_AS(load_game_file(fixture("bad_missing_profile.json")),
                    ParseError);
    CHECK_THROWS_AS(load_game_file(fixture("empty.json")), ParseError);
    CHECK_THROWS_AS(load_game_file(fixture("no_such_file.json")), ParseError);
    CHECK_THROWS_AS(parse_game_text("[1, 2, 3]"), ParseError);
    CHECK_THROWS_AS(parse_game_text("not json at all"), ParseError);
    // A JSON float is as inexact as a decimal string.
    CHECK_THROWS_AS(parse_game_text(R"({
      "players": 2, "strategies": [2, 2],
      "payoffs": [{"profile": [1, 1], "values": [1.5, "1"]}]})"),
                    ParseError);
  }

  TEST_CASE("full run renders deterministic JSON") {
    RunConfig config = base_config("crossing.json", SolveMethod::Both, "json");
    config.emit_stats = true;
    const RunOutput first = run_config(config);
    REQUIRE(first.code == 0);

    SUBCASE("the report carries the verdict, coordinates, and stats") {
      const auto doc = nlohmann::json::parse(first.out);
      CHECK(doc.at("rpie_verdict") == "HasRationalTotallyMixed");
      CHECK(doc.at("method") == "both");
      REQUIRE(doc.at("equilibria").size() == 1);
      const auto& profile = doc.at("equilibria")[0].at("profile");
      REQUIRE(profile.size() == 3);
      const auto& p1 = profile[0];
      CHECK(p1.at("player") == 1);
      CHECK(p1.at("coords")[0].at("variable") == "x1_1");
      CHECK(p1.at("coords")[0].at("rational") == "3/5");
      CHECK(p1.at("coords")[0].at("decimal") == "0.600000");
      CHECK(profile[1].at("coords")[0].at("rational") == "1/2");
      CHECK(profile[2].at("coords")[0].at("rational") == "1/3");
      CHECK(doc.at("eliminants").size() == 2);
      CHECK(doc.at("stats").at("orbit").at("buchberger_calls") == 1);
      CHECK(doc.at("stats").at("naive").at("buchberger_calls") == 1);
      CHECK(doc.at("stats").at("naive").at("substitutions") == 2);
    }

    SUBCASE("stdout is byte-identical across runs; timings stay on stderr") {
      const RunOutput second = run_config(config);
      CHECK(second.code == 0);
      CHECK(second.out == first.out);
      CHECK(first.out.find("wall") == std::string::npos);
      CHECK(first.err.find("wall (orbit)") != std::string::npos);
      CHECK(first.err.find("wall (naive)") != std::string::npos);
    }

    SUBCASE("requested precision shows in the decimals") {
      RunConfig wide = config;
      wide.digits = 12;
      const auto doc = nlohmann::json::parse(run_config(wide).out);
      CHECK(doc.at("equilibria")[0].at("profile")[0].at("coords")[0]
                .at("decimal") == "0.600000000000");
    }
  }

  TEST_CASE("text walkthrough for the irrational fixture") {
    RunConfig config =
        base_config("shifted_crossing.json", SolveMethod::Orbit, "text");
    const RunOutput result = run_config(config);
    REQUIRE(result.code == 0);
    CHECK(result.out.find("verdict: RPIE") != std::string::npos);
    CHECK(result.out.find(
              "127*t^2 - 342*t + 153  [degree 2, C2, solvable, 2 real "
              "roots]  (sample seed)") != std::string::npos);
    CHECK(result.out.find("equilibria: 1") != std::string::npos);
    CHECK(result.out.find("sqrt(1090)") != std::string::npos);

    SUBCASE("radical rendering can be switched off") {
      RunConfig plain = config;
      plain.emit_radicals = false;
      const RunOutput bare = run_config(plain);
      CHECK(bare.code == 0);
      CHECK(bare.out.find("sqrt") == std::string::npos);
      CHECK(bare.out.find("[root of 127*t^2 - 342*t + 153]") !=
            std::string::npos);
    }
  }

  TEST_CASE("exit codes map the failure modes") {
    SUBCASE("two players with the conjugation method") {
      const RunOutput result =
          run_config(base_config("pennies.json", SolveMethod::Orbit, "json"));
      CHECK(result.code == 2);
      CHECK(result.out.empty());
      CHECK(result.err.find("two-player") != std::string::npos);
    }

    SUBCASE("two players still solve with the substitution method") {
      const RunOutput result =
          run_config(base_config("pennies.json", SolveMethod::Naive, "json"));
      CHECK(result.code == 0);
      const auto doc = nlohmann::json::parse(result.out);
      CHECK(doc.at("rpie_verdict") == "HasRationalTotallyMixed");
      CHECK(doc.at("equilibria")[0].at("profile")[0].at("coords")[0]
                .at("rational") == "1/2");
    }

    SUBCASE("degenerate systems") {
      const RunOutput result =
          run_config(base_config("flat.json", SolveMethod::Orbit, "json"));
      CHECK(result.code == 3);
    }

    SUBCASE("size limit") {
      RunConfig config =
          base_config("crossing.json", SolveMethod::Orbit, "json");
      config.size_limit = 5;
      CHECK(run_config(config).code == 4);
    }

    SUBCASE("configuration and input errors") {
      RunConfig config =
          base_config("crossing.json", SolveMethod::Orbit, "yaml");
      CHECK(run_config(config).code == 1);

      config = base_config("no_such_file.json", SolveMethod::Orbit, "json");
      CHECK(run_config(config).code == 1);

      config = base_config("crossing.json", SolveMethod::Orbit, "json");
      config.digits = 0;
      CHECK(run_config(config).code == 1);

      config = base_config("bad_decimal.json", SolveMethod::Naive, "json");
      CHECK(run_config(config).code == 1);
    }
  }
}
