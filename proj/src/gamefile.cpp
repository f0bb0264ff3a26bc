#include "nasheq/gamefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nasheq/errors.hpp"

namespace nasheq {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

const json& require_field(const json& object, const char* key,
                          const char* where) {
  if (!object.is_object() || !object.contains(key)) {
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
  }
  return object.at(key);
}

int require_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ParseError(where + ": expected an integer");
  }
  return value.get<int>();
}

// Exact rational literal: a JSON integer or an integer/"p/q" string.
// Anything with a decimal point (JSON float or "1.5") is rejected so no
// payoff can silently lose exactness.
std::string require_rational_text(const json& value,
                                  const std::string& where) {
  if (value.is_number_integer()) {
    return std::to_string(value.get<long long>());
  }
  if (value.is_string()) {
    return value.get<std::string>();
  }
  throw ParseError(where + ": payoff values must be integers or \"p/q\" "
                   "strings, not decimals");
}

}  // namespace

Game parse_game_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid game JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("game file: top level must be a JSON object");
  }

  RawGame raw;
  raw.players = require_int(require_field(doc, "players", "game file"),
                            "field 'players'");

  const json& strategies =
      require_field(doc, "strategies", "game file");
  if (!strategies.is_array()) {
    throw ParseError("field 'strategies': expected an array");
  }
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    raw.strategy_counts.push_back(require_int(
        strategies[i], "field 'strategies'[" + std::to_string(i) + "]"));
  }

  const json& payoffs = require_field(doc, "payoffs", "game file");
  if (!payoffs.is_array()) {
    throw ParseError("field 'payoffs': expected an array");
  }
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    const std::string where = "payoff entry " + std::to_string(i);
    const json& entry = payoffs[i];
    PayoffEntry parsed;

    const json& profile = require_field(entry, "profile", where.c_str());
    if (!profile.is_array()) {
      throw ParseError(where + ": field 'profile' must be an array");
    }
    for (std::size_t j = 0; j < profile.size(); ++j) {
      parsed.profile.push_back(require_int(
          profile[j], where + ": profile[" + std::to_string(j) + "]"));
    }

    const json& values = require_field(entry, "values", where.c_str());
    if (!values.is_array()) {
      throw ParseError(where + ": field 'values' must be an array");
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
      parsed.values.push_back(require_rational_text(
          values[j], where + ": values[" + std::to_string(j) + "]"));
    }
    raw.entries.push_back(std::move(parsed));
  }

  return validate_game(raw);
}

Game load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open game file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ParseError("game file '" + path + "' is empty");
  }
  return parse_game_text(text);
}

std::string render_game(const Game& game) {
  ordered doc;
  doc["players"] = game.players();
  doc["strategies"] = game.strategy_counts();
  ordered entries = ordered::array();

  std::vector<int> profile(static_cast<std::size_t>(game.players()), 0);
  bool done = false;
  while (!done) {
    ordered entry;
    ordered indices = ordered::array();
    for (int s : profile) indices.push_back(s + 1);
    entry["profile"] = std::move(indices);
    ordered values = ordered::array();
    for (int p = 0; p < game.players(); ++p) {
      values.push_back(rat_to_string(game.payoff(p, profile)));
    }
    entry["values"] = std::move(values);
    entries.push_back(std::move(entry));

    done = true;
    for (int p = game.players() - 1; p >= 0; --p) {
      if (++profile[static_cast<std::size_t>(p)] < game.strategies(p)) {
        done = false;
        break;
      }
      profile[static_cast<std::size_t>(p)] = 0;
    }
  }
  doc["payoffs"] = std::move(entries);
  return doc.dump(2) + "\n";
}

}  // namespace nasheq
