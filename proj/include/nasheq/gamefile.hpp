#pragma once

#include <string>

#include "nasheq/game.hpp"

namespace nasheq {

// Parses a JSON game description:
//   {
//     "players": 3,
//     "strategies": [2, 2, 2],
//     "payoffs": [
//       { "profile": [1, 1, 1], "values": ["6", "-1", "4"] },
//       ...
//     ]
//   }
// Profiles are 1-based. Payoff values are exact rationals written as
// integers or as "p/q" strings; decimal notation is rejected. Throws
// ParseError naming the offending field; validate_game errors pass
// through unchanged.
Game parse_game_text(const std::string& text);

// Reads and parses a game file. Throws ParseError when the file cannot be
// read or is empty.
Game load_game_file(const std::string& path);

// Canonical JSON rendering of a validated game: profiles in row-major
// order (first player slowest), payoffs as exact rational strings.
// parse_game_text(render_game(g)) reproduces g's payoff map.
std::string render_game(const Game& game);

}  // namespace nasheq
