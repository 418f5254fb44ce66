#include "entlab/cli.hpp"
#include "entlab/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

struct FormatOption {
  std::string name = "table";
};

void add_common_flags(CLI::App* cmd, entlab::cli::RunConfig& config, FormatOption& format) {
  cmd->add_option("--format", format.name, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--seed", config.seed, "Seed recorded in the report and used by random sweeps");
  cmd->add_option_function<std::string>(
      "--out", [&config](const std::string& path) { config.out_path = path; },
      "Write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete information lab: exact distributions, entropy reports, "
               "inequality checks, simplex search, one-time-pad analysis"};
  app.require_subcommand(1);

  entlab::cli::RunConfig config;
  FormatOption format;

  CLI::App* entropy = app.add_subcommand("entropy", "Shannon entropy of a distribution file");
  entropy->add_option("dist-file", config.input, "CSV or JSON distribution")->required();
  add_common_flags(entropy, config, format);

  CLI::App* check = app.add_subcommand("check", "Entropy identities and verdicts for a joint file");
  check->add_option("joint-file", config.input, "CSV or JSON joint distribution")->required();
  check->add_option("--sweep", config.sweep,
                    "Also run N seeded random joints through the inequality checks");
  add_common_flags(check, config, format);

  CLI::App* search = app.add_subcommand(
      "search", "Exhaustive grid search for pointwise conditional-entropy increase");
  search->add_option("--rows", config.rows, "Rows of the enumerated joints")->required();
  search->add_option("--cols", config.cols, "Columns of the enumerated joints")->required();
  search->add_option("--step", config.step, "Grid step, e.g. 1/10")->required();
  add_common_flags(search, config, format);

  CLI::App* otp = app.add_subcommand("otp", "One-time-pad posterior and secrecy analysis");
  otp->add_option("--model", config.model_path, "JSON model {\"prior\": [...], \"key\": [...]}")
      ->required();
  otp->add_option("--ciphertext", config.ciphertext, "Observed ciphertext symbol")->required();
  otp->add_option_function<std::string>(
      "--blend", [&config](const std::string& l) { config.blend_lambda = l; },
      "Also blend the prior toward the uniform belief with this weight");
  add_common_flags(otp, config, format);

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Recompute the built-in reference scenarios");
  reproduce->add_option("target", config.target, "table1, example1, example2 or all")
      ->check(CLI::IsMember({"table1", "example1", "example2", "all"}));
  add_common_flags(reproduce, config, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a parse error
  }

  if (entropy->parsed()) config.command = entlab::cli::Command::Entropy;
  if (check->parsed()) config.command = entlab::cli::Command::Check;
  if (search->parsed()) config.command = entlab::cli::Command::Search;
  if (otp->parsed()) config.command = entlab::cli::Command::Otp;
  if (reproduce->parsed()) config.command = entlab::cli::Command::Reproduce;
  config.format = entlab::cli::parse_format(format.name);

  return entlab::cli::run(config, std::cout, std::cerr);
}
