// Command-line front end for the braces library.
//
// Subcommands: verify, series, ybe, classify, closure, power-table.
// Exit codes: 0 = all checks passed, 1 = a check failed (report carries the
// witness), 2 = malformed input or unsupported configuration.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "braces/run.hpp"

namespace {

// "A..B" with signed endpoints.
std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(
    const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    std::int64_t lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) return std::nullopt;
    std::string rest = text.substr(dots + 2);
    std::int64_t hi = std::stoll(rest, &used);
    if (used != rest.size()) return std::nullopt;
    return std::make_pair(lo, hi);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void add_common_options(CLI::App* cmd, braces::RunConfig& cfg,
                        std::string& range_text, std::string& format_text) {
  cmd->add_option("--spec", cfg.spec_path,
                  "Path to a JSON spec document (brace or ybe_solution)");
  cmd->add_option("--family", cfg.family,
                  "Inline family: free_d2, free_d3, quotient_d2, quotient_d3, "
                  "trivial_cyclic");
  cmd->add_option("--modulus", cfg.modulus, "Modulus for quotient/trivial families");
  cmd->add_option("--range", range_text,
                  "Integer range A..B (moduli for classify, exponents for "
                  "power-table and identity ranges)");
  cmd->add_option("--strategy", cfg.strategy,
                  "Check strategy: exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  cmd->add_option("--samples", cfg.samples, "Sample count for sampled strategy");
  cmd->add_option("--seed", cfg.seed, "Seed for sampled strategy");
  cmd->add_option("--max-depth", cfg.max_depth,
                  "Stage bound for series computations");
  cmd->add_option("--out", cfg.out_path, "Report output path (default stdout)");
  cmd->add_option("--format", format_text, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for one-generator left braces"};
  app.require_subcommand(1);

  braces::RunConfig cfg;
  std::string range_text;
  std::string format_text = "json";

  for (const char* name :
       {"verify", "series", "ybe", "classify", "closure", "power-table"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common_options(cmd, cfg, range_text, format_text);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Help/version requests exit 0; anything else is an input error.
    return code == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format_text == "csv" ? braces::OutputFormat::csv
                                    : braces::OutputFormat::json;
  if (!range_text.empty()) {
    cfg.range = parse_range(range_text);
    if (!cfg.range) {
      std::cerr << "error: --range expects A..B with integer endpoints\n";
      return 2;
    }
  }

  return braces::run(cfg);
}
