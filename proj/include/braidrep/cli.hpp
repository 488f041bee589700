#pragma once

// Command-line front end. Every verification is a subcommand; reports go to the output
// stream, progress and diagnostics to the error stream.
//
// Exit codes: 0 pass, 1 fail or inconclusive, 2 usage error, 3 budget exceeded.

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace braidrep::cli {

enum class Verdict { pass, fail, inconclusive, budget_exceeded };

std::string to_string(Verdict v);
int exit_code(Verdict v);

struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
  nlohmann::json payload;
  double elapsed_ms = 0;
};

nlohmann::json to_json(const RunReport& r);

/// Wall-time budget in milliseconds from BRAIDREP_BUDGET_MS, if set to a positive integer.
std::optional<long long> budget_from_environment();

/// `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidrep::cli
