#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nasheq/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact totally mixed Nash equilibria of finite games with rational "
      "payoffs: one Groebner basis run, a sample solution, and its "
      "conjugates under the Galois action"};

  nasheq::RunConfig config;
  std::string method = "orbit";

  app.add_option("-i,--input", config.input_path, "Game file (JSON)")
      ->required();
  app.add_option("-m,--method", method,
                 "Solution method: orbit, naive, or both")
      ->check(CLI::IsMember({"orbit", "naive", "both"}));
  app.add_option("-f,--format", config.output_format,
                 "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("-d,--digits", config.digits,
                 "Decimal places for rendered values")
      ->check(CLI::PositiveNumber);
  app.add_flag("--radicals,!--no-radicals", config.emit_radicals,
               "Render closed radical forms when available");
  app.add_flag("--stats", config.emit_stats,
               "Report solver counters (and wall times on stderr)");
  app.add_option("--order", config.variable_order,
                 "Explicit variable order (lex-greatest first)");
  app.add_option("--max-vars", config.size_limit,
                 "Refuse games with more strategy weights than this")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  config.method = nasheq::parse_method(method);
  return nasheq::run(config, std::cout, std::cerr);
}
