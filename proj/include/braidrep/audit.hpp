#pragma once

// Finite-range checking of the integer inequality chains behind the classification
// argument. Cases are data: bindings, a predicate, and an optional tracked expression,
// all written in a small exact-integer expression language.
//
// Expression language: integer literals, variables, + - * / % ^ (floor division and
// modulus, right-associative power), unary -, comparisons (chainable: a <= b < c),
// !, &&, ||, => (right-associative), and binom(n, k), pow(a, b), min, max, abs.

#include "braidrep/scalar.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace braidrep::audit {

using Value = std::variant<BigInt, bool>;
using Environment = std::map<std::string, BigInt>;

class Expression {
 public:
  /// Throws std::invalid_argument with the offending position on a syntax error.
  static Expression parse(const std::string& text);

  Value evaluate(const Environment& env) const;
  BigInt evaluate_integer(const Environment& env) const;
  bool evaluate_bool(const Environment& env) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

/// One binding step: either a ranged variable (inclusive bounds) or a derived value.
struct Binding {
  std::string name;
  std::optional<Expression> from;
  std::optional<Expression> to;
  std::optional<Expression> let;
  bool margin = false;  // upper bound widened by the run margin
};

struct Clause {
  std::string name;
  std::vector<Binding> bindings;
  Expression predicate;
  std::optional<Expression> track;
};

struct InequalityCase {
  std::string id;
  std::string location;
  std::string anchor;
  std::vector<Clause> clauses;
};

struct Ledger {
  std::vector<InequalityCase> cases;
  const InequalityCase& find(const std::string& id) const;
};

struct Witness {
  std::string clause;
  Environment values;
};

struct CaseReport {
  std::string id;
  std::uint64_t tuples = 0;
  std::uint64_t violation_count = 0;
  std::vector<Witness> violations;  // first few witnesses
  std::vector<Witness> tracked;     // tuples where the clause's track expression holds
};

inline constexpr int kDefaultMargin = 20;
inline constexpr std::uint64_t kMaxTuplesPerClause = 100'000'000;

Ledger parse_ledger(const nlohmann::json& doc);
Ledger load_ledger(const std::string& path);
/// The ledger compiled into the library.
const Ledger& builtin_ledger();
const std::string& builtin_ledger_text();

CaseReport run_case(const InequalityCase& c, int margin = kDefaultMargin);
/// Throws std::out_of_range for an unknown id.
CaseReport run_case(const std::string& id, int margin = kDefaultMargin);

nlohmann::json to_json(const CaseReport& r);

}  // namespace braidrep::audit
