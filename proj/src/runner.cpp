#include "nasheq/runner.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "nasheq/errors.hpp"
#include "nasheq/gamefile.hpp"

namespace nasheq {

namespace {

using ordered = nlohmann::ordered_json;

std::string source_name(TupleSource source) {
  return source == TupleSource::Sample ? "sample" : "conjugate";
}

const NFElement& coordinate_of(const SolveResult& result,
                               const SolutionTuple& tuple, int player,
                               int strategy) {
  const auto index =
      result.basis.order->index_of(strategy_var_name(player, strategy));
  if (!index) {
    throw InternalError("solved system lost a strategy weight variable");
  }
  return tuple.coordinates[*index];
}

ordered coordinate_json(const std::string& name, const NFElement& value,
                        const RunConfig& config) {
  ordered coord;
  coord["variable"] = name;
  const auto rational = value.as_rational();
  coord["rational"] =
      rational ? ordered(rat_to_string(*rational)) : ordered(nullptr);
  coord["decimal"] = approx_decimal(value, config.digits);
  coord["minimal_polynomial"] =
      value.algebraic_value().minimal_polynomial().to_string();
  if (config.emit_radicals) {
    const auto radical = to_radical(value);
    coord["radical"] =
        radical ? ordered(radical->to_string()) : ordered(nullptr);
  }
  return coord;
}

ordered stats_json(const SolveStats& stats) {
  ordered block;
  block["buchberger_calls"] = stats.buchberger_calls;
  block["univariate_factorizations"] = stats.univariate_factorizations;
  block["factorizations_after_sample"] = stats.factorizations_after_sample;
  block["substitutions"] = stats.substitutions;
  block["substitutions_after_sample"] = stats.substitutions_after_sample;
  block["orbit_actions"] = stats.orbit_actions;
  block["candidates_generated"] = stats.candidates_generated;
  block["candidates_rejected_rational"] = stats.candidates_rejected_rational;
  block["candidates_rejected_complex"] = stats.candidates_rejected_complex;
  block["candidates_rejected_not_nash"] = stats.candidates_rejected_not_nash;
  return block;
}

void render_json(const Game& game, const SolveResult& result,
                 const RunConfig& config, std::ostream& out) {
  ordered doc;
  ordered game_block;
  game_block["players"] = game.players();
  game_block["strategies"] = game.strategy_counts();
  doc["game"] = std::move(game_block);
  doc["method"] = method_name(result.method);
  doc["rpie_verdict"] = verdict_name(result.verdict);

  ordered equilibria = ordered::array();
  for (const Equilibrium& eq : result.equilibria) {
    ordered entry;
    entry["source"] = source_name(eq.tuple.source);
    ordered profile = ordered::array();
    for (int p = 0; p < game.players(); ++p) {
      ordered block;
      block["player"] = p + 1;
      ordered coords = ordered::array();
      for (int s = 0; s < game.strategies(p); ++s) {
        coords.push_back(
            coordinate_json(strategy_var_name(p, s),
                            coordinate_of(result, eq.tuple, p, s), config));
      }
      block["coords"] = std::move(coords);
      profile.push_back(std::move(block));
    }
    entry["profile"] = std::move(profile);
    equilibria.push_back(std::move(entry));
  }
  doc["equilibria"] = std::move(equilibria);

  ordered eliminants = ordered::array();
  for (const EliminantReport& report : result.eliminants) {
    ordered entry;
    entry["variable"] = report.variable;
    entry["polynomial"] = report.polynomial.to_string();
    ordered galois;
    galois["degree"] = report.galois.degree;
    galois["group"] = group_name(report.galois.group);
    galois["solvable"] = report.galois.solvable.value_or(false);
    galois["real_roots"] = report.galois.real_roots;
    entry["galois"] = std::move(galois);
    entry["used_for_sample"] = report.used_for_sample;
    eliminants.push_back(std::move(entry));
  }
  doc["eliminants"] = std::move(eliminants);

  if (config.emit_stats) {
    ordered stats;
    if (result.method != SolveMethod::Naive) {
      stats["orbit"] = stats_json(result.stats_orbit);
    }
    if (result.method != SolveMethod::Orbit) {
      stats["naive"] = stats_json(result.stats_naive);
    }
    doc["stats"] = std::move(stats);
  }

  out << doc.dump(2) << "\n";
}

void render_coordinate_text(const std::string& name, const NFElement& value,
                            const RunConfig& config, std::ostream& out) {
  out << "    " << name << " = ";
  const auto rational = value.as_rational();
  if (rational) {
    out << rat_to_string(*rational) << " = "
        << approx_decimal(value, config.digits) << "\n";
    return;
  }
  if (config.emit_radicals) {
    if (const auto radical = to_radical(value)) {
      out << radical->to_string() << " = ";
    }
  }
  out << approx_decimal(value, config.digits) << "  [root of "
      << value.algebraic_value().minimal_polynomial().to_string() << "]\n";
}

void render_stats_text(const std::string& label, const SolveStats& stats,
                       std::ostream& out) {
  out << "stats (" << label << "):\n";
  out << "  buchberger_calls: " << stats.buchberger_calls << "\n";
  out << "  univariate_factorizations: " << stats.univariate_factorizations
      << "\n";
  out << "  factorizations_after_sample: "
      << stats.factorizations_after_sample << "\n";
  out << "  substitutions: " << stats.substitutions << "\n";
  out << "  substitutions_after_sample: " << stats.substitutions_after_sample
      << "\n";
  out << "  orbit_actions: " << stats.orbit_actions << "\n";
  out << "  candidates_generated: " << stats.candidates_generated << "\n";
  out << "  candidates_rejected_rational: "
      << stats.candidates_rejected_rational << "\n";
  out << "  candidates_rejected_complex: "
      << stats.candidates_rejected_complex << "\n";
  out << "  candidates_rejected_not_nash: "
      << stats.candidates_rejected_not_nash << "\n";
}

void render_text(const Game& game, const SolveResult& result,
                 const RunConfig& config, std::ostream& out) {
  out << "game: " << game.players() << " players, strategies ";
  for (int p = 0; p < game.players(); ++p) {
    if (p) out << "/";
    out << game.strategies(p);
  }
  out << "\n";
  out << "method: " << method_name(result.method) << "\n";
  out << "verdict: " << verdict_name(result.verdict) << "\n";

  if (!result.eliminants.empty()) {
    out << "eliminant factors in " << result.eliminants.front().variable
        << ":\n";
    for (const EliminantReport& report : result.eliminants) {
      out << "  " << report.polynomial.to_string() << "  [degree "
          << report.galois.degree << ", "
          << group_name(report.galois.group) << ", "
          << (report.galois.solvable.value_or(false) ? "solvable"
                                                     : "not solvable")
          << ", " << report.galois.real_roots << " real root"
          << (report.galois.real_roots == 1 ? "" : "s") << "]";
      if (report.used_for_sample) out << "  (sample seed)";
      out << "\n";
    }
  }

  out << "equilibria: " << result.equilibria.size() << "\n";
  for (std::size_t i = 0; i < result.equilibria.size(); ++i) {
    const Equilibrium& eq = result.equilibria[i];
    out << "equilibrium " << (i + 1) << " ("
        << source_name(eq.tuple.source) << "):\n";
    for (int p = 0; p < game.players(); ++p) {
      out << "  player " << (p + 1) << ":\n";
      for (int s = 0; s < game.strategies(p); ++s) {
        render_coordinate_text(strategy_var_name(p, s),
                               coordinate_of(result, eq.tuple, p, s), config,
                               out);
      }
    }
  }

  if (config.emit_stats) {
    if (result.method != SolveMethod::Naive) {
      render_stats_text("orbit", result.stats_orbit, out);
    }
    if (result.method != SolveMethod::Orbit) {
      render_stats_text("naive", result.stats_naive, out);
    }
  }
}

void report_wall_times(const SolveResult& result, std::ostream& err) {
  const auto report = [&err](const std::string& label,
                             const SolveStats& stats) {
    err << "wall (" << label << "): groebner " << stats.wall_groebner_s
        << "s, roots " << stats.wall_roots_s << "s, filter "
        << stats.wall_filter_s << "s\n";
  };
  if (result.method != SolveMethod::Naive) report("orbit", result.stats_orbit);
  if (result.method != SolveMethod::Orbit) report("naive", result.stats_naive);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.digits < 1) {
      throw ParseError("digits must be at least 1");
    }
    if (config.output_format != "json" && config.output_format != "text") {
      throw ParseError("unknown output format '" + config.output_format +
                       "' (json, text)");
    }
    const Game game = load_game_file(config.input_path);

    SolveOptions options;
    options.method = config.method;
    options.size_limit = config.size_limit;
    if (!config.variable_order.empty()) {
      options.order = make_order(config.variable_order);
    }
    const SolveResult result = solve(game, options);

    if (config.output_format == "json") {
      render_json(game, result, config, out);
    } else {
      render_text(game, result, config, out);
    }
    if (config.emit_stats) report_wall_times(result, err);
    return 0;
  } catch (const BimatrixUnsupported& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonGenericGame& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nasheq
