#pragma once

// The acceptance suite: criteria 1-11, each with its stated parameters and time limit.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidrep {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct AcceptanceOptions {
  unsigned workers = 1;
  std::uint64_t seed = kDefaultSeed;
  /// Smallest stated parameter of each criterion only; see README for what is dropped.
  bool quick = false;
  /// Overrides the per-criterion search budget of the homomorphism enumerations.
  std::optional<std::chrono::milliseconds> search_budget;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool budget_exceeded = false;
  double elapsed_ms = 0;
  double limit_ms = 0;
  std::string detail;
  nlohmann::json evidence;
};

std::vector<int> acceptance_ids();
std::string criterion_title(int id);
/// Throws std::out_of_range for an id outside 1..11.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

nlohmann::json to_json(const CriterionResult& r);

}  // namespace braidrep
