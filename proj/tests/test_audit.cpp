#include "braidrep/audit.hpp"

#include <doctest.h>

#include <set>

using namespace braidrep;
using namespace braidrep::audit;

namespace {

BigInt eval(const std::string& text, const Environment& env = {}) {
  return Expression::parse(text).evaluate_integer(env);
}

bool holds(const std::string& text, const Environment& env = {}) {
  return Expression::parse(text).evaluate_bool(env);
}

const Clause& clause(const InequalityCase& c, const std::string& name) {
  for (const auto& cl : c.clauses)
    if (cl.name == name) return cl;
  FAIL("missing clause " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("audit") {
  TEST_CASE("arithmetic") {
    CHECK(eval("1 + 2 * 3") == 7);
    CHECK(eval("(1 + 2) * 3") == 9);
    CHECK(eval("2^3^2") == 512);
    CHECK(eval("-2^2") == -4);
    CHECK(eval("7/2") == 3);
    CHECK(eval("-7/2") == -4);
    CHECK(eval("7 % 3") == 1);
    CHECK(eval("-7 % 3") == 2);
    CHECK(eval("2^100") == power(2, 100));
    CHECK(eval("binom(13, 2)") == 78);
    CHECK(eval("binom(5, 7)") == 0);
    CHECK(eval("pow(3, 4) + min(2, -1) + max(2, 5) + abs(-6)") == 81 - 1 + 5 + 6);
    CHECK(eval("n*(n-1)/2", {{"n", 13}}) == 78);
  }

  TEST_CASE("logic") {
    CHECK(holds("1 < 2 < 3"));
    CHECK_FALSE(holds("1 < 3 < 2"));
    CHECK(holds("2 >= 2 > 1 == 1"));
    CHECK(holds("1 == 2 => 1 == 3"));
    CHECK(holds("!(1 == 2) && (1 == 1 || 1 == 2)"));
    // Right associative: a => (b => c). Left association would make this false.
    CHECK(holds("1 == 2 => 1 == 2 => 1 == 2"));
    CHECK(holds("1 != 2"));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Expression::parse("1 +"), std::invalid_argument);
    CHECK_THROWS_AS(Expression::parse("(1"), std::invalid_argument);
    CHECK_THROWS_AS(Expression::parse("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Expression::parse("binom(1)"), std::invalid_argument);
    CHECK_THROWS(eval("x + 1"));
    CHECK_THROWS(eval("1 / 0"));
    CHECK_THROWS(holds("1 + 1"));
    CHECK_THROWS(eval("1 < 2"));
  }

  TEST_CASE("built-in ledger covers A1 to A9 exactly") {
    const auto& ledger = builtin_ledger();
    std::set<std::string> ids;
    for (const auto& c : ledger.cases) {
      CHECK(ids.insert(c.id).second);
      CHECK_FALSE(c.location.empty());
      CHECK_FALSE(c.anchor.empty());
      CHECK_FALSE(c.clauses.empty());
      bool has_margin = false;
      for (const auto& cl : c.clauses)
        for (const auto& b : cl.bindings) has_margin = has_margin || b.margin;
      CHECK_MESSAGE(has_margin, c.id);
    }
    CHECK(ids == std::set<std::string>{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9"});
    CHECK_THROWS_AS(ledger.find("A10"), std::out_of_range);
    CHECK(parse_ledger(nlohmann::json::parse(builtin_ledger_text())).cases.size() == 9);
  }

  TEST_CASE("every case has zero violations with the default margin") {
    for (const auto& c : builtin_ledger().cases) {
      auto r = run_case(c);
      CHECK_MESSAGE(r.violation_count == 0, c.id);
      CHECK(r.tuples > 0);
    }
  }

  TEST_CASE("A1 gate from n = 26") {
    const auto& gate = clause(builtin_ledger().find("A1"), "gate");
    for (long n = 26; n <= 60; ++n)
      for (long g = 0; g <= n - 3; ++g) CHECK(gate.predicate.evaluate_bool({{"n", n}, {"g", g}, {"k", n / 2}}));
    // Below 26 the gate fails somewhere, so the threshold is not slack.
    bool fails_at_25 = false;
    for (long g = 0; g <= 22; ++g) fails_at_25 = fails_at_25 || !gate.predicate.evaluate_bool({{"n", 25}, {"g", g}, {"k", 12}});
    CHECK(fails_at_25);
  }

  TEST_CASE("A2 gate at (n, g) = (14, 11)") {
    const auto& gate = clause(builtin_ledger().find("A2"), "gate");
    CHECK(gate.predicate.evaluate_bool({{"n", 14}, {"g", 11}, {"k", 7}}));
    CHECK(eval("2^(k-3)-1", {{"k", 7}}) == 15);
  }

  TEST_CASE("A8 equality case is exactly n = 2k + 1, g = n - 3") {
    auto r = run_case("A8");
    CHECK(r.violation_count == 0);
    std::set<long> ks;
    for (const auto& w : r.tracked) {
      CHECK(w.clause == "chain");
      const long k = w.values.at("k").convert_to<long>();
      CHECK(w.values.at("n") == 2 * k + 1);
      CHECK(w.values.at("g") == 2 * k - 2);
      ks.insert(k);
    }
    CHECK(ks.size() == 28);
    CHECK(*ks.begin() == 13);
    CHECK(*ks.rbegin() == 40);
  }

  TEST_CASE("margin widens flagged upper bounds only") {
    auto narrow = run_case("A1", 0);
    auto wide = run_case("A1", 20);
    CHECK(narrow.tuples < wide.tuples);
    CHECK(narrow.violation_count == 0);
  }

  TEST_CASE("a false clause yields witnesses") {
    auto ledger = parse_ledger(nlohmann::json::parse(R"({"cases": [{
      "id": "X", "location": "test", "anchor": "n^2 < 50",
      "clauses": [{"name": "square", "bind": [{"name": "n", "from": "1", "to": "10"}, {"name": "m", "let": "n*n"}],
                   "predicate": "m < 50"}]}]})"));
    auto r = run_case(ledger.cases.front(), 0);
    CHECK(r.tuples == 10);
    CHECK(r.violation_count == 3);
    REQUIRE(r.violations.size() == 3);
    CHECK(r.violations[0].values.at("n") == 8);
    CHECK(r.violations[0].values.at("m") == 64);
    auto j = to_json(r);
    CHECK(j["case"] == "X");
    CHECK(j["violations"].size() == 3);
    CHECK_THROWS(parse_ledger(nlohmann::json::parse(R"({"cases": [{"id": "Y", "clauses": [{"name": "c", "bind": [], "predicate": "1 +"}]}]})")));
  }
}
