#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace entlab::cli {

using json = nlohmann::ordered_json;

enum class Command { Entropy, Check, Search, Otp, Reproduce };

enum class OutputFormat { Table, Json, Csv };

/// Fully resolved invocation. The seed feeds the randomized property sweep
/// of `check --sweep` and is recorded in every report so that identical
/// configs reproduce byte-identical JSON.
struct RunConfig {
  Command command = Command::Reproduce;
  OutputFormat format = OutputFormat::Table;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;

  std::string input;  // entropy/check: distribution or joint file

  // check
  std::uint64_t sweep = 0;  // number of random joints to sweep, 0 = off

  // search
  std::size_t rows = 2;
  std::size_t cols = 2;
  std::string step = "1/10";

  // otp
  std::string model_path;
  std::size_t ciphertext = 0;
  std::optional<std::string> blend_lambda;

  // reproduce
  std::string target = "all";  // table1 | example1 | example2 | all
};

OutputFormat parse_format(const std::string& name);  // throws ParseError

/// Executes the command and writes the rendered report to `out` (or the
/// config's out_path). Returns 0 on success, 1 on validation errors, 2 on
/// I/O or parse errors; failures leave one machine-readable JSON line on
/// `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Builds the report document without rendering it. Same error behavior as
/// run(), expressed as exceptions.
json build_report(const RunConfig& config);

/// The consolidated built-in reference report (reproduce, target "all").
json reproduce_paper();

std::string render(const json& report, OutputFormat format);

}  // namespace entlab::cli
