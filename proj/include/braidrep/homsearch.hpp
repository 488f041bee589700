#pragma once

// Exhaustive enumeration of homomorphisms B_n -> Sigma_m up to simultaneous
// conjugation, and the rigidity checks built on it.

#include "braidrep/braid.hpp"
#include "braidrep/perm.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidrep {

/// Images s_1..s_{n-1} of the Artin generators in Sigma_m.
struct SymHomomorphism {
  int n = 0;
  int m = 0;
  std::vector<Permutation> gen_images;

  /// Image of sigma_i, 1-based.
  const Permutation& image(int i) const { return gen_images.at(static_cast<std::size_t>(i - 1)); }
  /// Image of a braid word, evaluated letter by letter with Permutation::compose.
  Permutation evaluate(const BraidWord& word) const;
  /// Braid relation for adjacent images, commutation for distant ones, shared cycle type.
  bool satisfies_relations() const;

  friend bool operator==(const SymHomomorphism&, const SymHomomorphism&) = default;
  friend auto operator<=>(const SymHomomorphism& a, const SymHomomorphism& b) {
    return a.gen_images <=> b.gen_images;
  }
};

enum class HomKind { cyclic, standard, other };

std::string to_string(HomKind kind);

struct HomClassification {
  HomKind kind = HomKind::other;
  bool transitive = false;
};

HomClassification classify(const SymHomomorphism& h);

/// Limits on a search. Unset fields mean unlimited; `allow_large` lifts the default
/// (n <= 8, m <= 10) range guard.
struct SearchBudget {
  std::optional<std::chrono::milliseconds> wall_time;
  std::optional<std::uint64_t> max_nodes;
  bool allow_large = false;
};

struct SearchOptions {
  bool transitive_only = false;
  unsigned workers = 1;
  SearchBudget budget;
};

struct Enumeration {
  int n = 0;
  int m = 0;
  /// One canonical representative per conjugacy orbit, sorted lexicographically.
  std::vector<SymHomomorphism> orbits;
  std::uint64_t nodes = 0;
};

/// Thrown when a budget runs out. Carries the orbits found in the completed
/// first-level subtrees and the fraction of those subtrees that finished.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double completed_fraction, Enumeration partial);

  double completed_fraction() const noexcept { return completed_fraction_; }
  const Enumeration& partial() const noexcept { return partial_; }

 private:
  double completed_fraction_;
  Enumeration partial_;
};

/// All homomorphisms B_n -> Sigma_m up to simultaneous conjugation. Requires n >= 3,
/// 1 <= m <= 16; (n, m) beyond n <= 8, m <= 10 needs budget.allow_large.
Enumeration enumerate_homs(int n, int m, const SearchOptions& options = {});

/// Outcome of checking a rigidity statement over one or more exhaustive enumerations.
struct RigidityReport {
  std::string statement;
  int n = 0;
  std::vector<int> degrees;
  bool holds = true;
  std::size_t orbits_checked = 0;
  std::size_t transitive_orbits = 0;
  std::vector<SymHomomorphism> counterexamples;
};

/// For 6 < n < m < 2n: every transitive orbit is cyclic.
RigidityReport verify_lin_a(int n, int m, const SearchOptions& options = {});
/// For n >= 5: every transitive orbit with m = n is cyclic or standard.
RigidityReport verify_artin(int n, const SearchOptions& options = {});
/// For n >= 5: every orbit for every m < n is cyclic.
RigidityReport verify_lin_f(int n, const SearchOptions& options = {});

nlohmann::json to_json(const Enumeration& e, bool complete = true);
nlohmann::json to_json(const RigidityReport& r);

}  // namespace braidrep
