#include "braidrep/acceptance.hpp"

#include "braidrep/audit.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/homsearch.hpp"
#include "braidrep/superelliptic.hpp"
#include "braidrep/symp.hpp"
#include "braidrep/tss.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace braidrep {

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string title;
  double limit_ms;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {"transitive B_n -> Sigma_n is cyclic or standard, n in {5, 6}", 10 * 60 * 1000.0},
      {"transitive B_7 -> Sigma_8 is cyclic", 60 * 60 * 1000.0},
      {"B_n -> Sigma_m with m < n is cyclic, n in {5, 6, 7}", 5 * 60 * 1000.0},
      {"braid-power set is {-1, 0, 1} for g <= 5, kmax = 10", 1000.0},
      {"standard representation relations and transvection invariance", 10 * 1000.0},
      {"chain, lantern and Humphries identities", 2 * 60 * 1000.0},
      {"superelliptic genus, d = 2 comparison, d = 3 distinctions", 60 * 1000.0},
      {"label-size classifier sweep and n >= 26 gate", 1000.0},
      {"totally symmetric sets satisfy the 2^(k-1) order bound", 10 * 60 * 1000.0},
      {"inequality ledger A1-A9 with +20 margins", 60 * 1000.0},
      {"homomorphisms B_5 -> S_5 kill certified trivial words", 60 * 1000.0},
  };
  return table;
}

SearchOptions search_options(const AcceptanceOptions& o, std::chrono::milliseconds default_budget) {
  SearchOptions s;
  s.workers = o.workers;
  s.budget.wall_time = o.search_budget.value_or(default_budget);
  return s;
}

// Each check fills `evidence` and `detail` and returns whether the mathematical
// condition holds; timing is applied by the caller.
using Check = std::function<bool(const AcceptanceOptions&, nlohmann::json&, std::string&)>;

bool rigidity_ok(const RigidityReport& r, nlohmann::json& evidence, std::string& detail) {
  evidence.push_back(to_json(r));
  if (!r.holds) {
    std::ostringstream out;
    out << "n=" << r.n << ": " << r.counterexamples.size() << " counterexample orbit(s); first gens "
        << nlohmann::json(r.counterexamples.front().gen_images).dump() << "; ";
    detail += out.str();
  }
  return r.holds;
}

bool criterion1(const AcceptanceOptions& o, nlohmann::json& ev, std::string& detail) {
  ev = nlohmann::json::array();
  bool ok = true;
  std::vector<int> ns{5};
  if (!o.quick) ns.push_back(6);
  for (int n : ns)
    ok = rigidity_ok(verify_artin(n, search_options(o, std::chrono::minutes(10))), ev, detail) && ok;
  return ok;
}

bool criterion2(const AcceptanceOptions& o, nlohmann::json& ev, std::string& detail) {
  ev = nlohmann::json::array();
  return rigidity_ok(verify_lin_a(7, 8, search_options(o, std::chrono::hours(1))), ev, detail);
}

bool criterion3(const AcceptanceOptions& o, nlohmann::json& ev, std::string& detail) {
  ev = nlohmann::json::array();
  bool ok = true;
  std::vector<int> ns{5};
  if (!o.quick) ns.insert(ns.end(), {6, 7});
  for (int n : ns) ok = rigidity_ok(verify_lin_f(n, search_options(o, std::chrono::minutes(5))), ev, detail) && ok;
  return ok;
}

bool criterion4(const AcceptanceOptions&, nlohmann::json& ev, std::string& detail) {
  const std::vector<int> expected{-1, 0, 1};
  bool ok = true;
  ev = nlohmann::json::object();
  for (int g = 1; g <= 5; ++g) {
    auto set = braid_power_test(g, 10);
    ev[std::to_string(g)] = set;
    if (set != expected) {
      ok = false;
      detail += "g=" + std::to_string(g) + " gives " + nlohmann::json(set).dump() + "; ";
    }
  }
  return ok;
}

bool criterion5(const AcceptanceOptions& o, nlohmann::json& ev, std::string& detail) {
  bool ok = true;
  const int max_n = o.quick ? 8 : 12;
  nlohmann::json relations = nlohmann::json::object();
  for (int n = 3; n <= max_n; ++n)
    for (int sign : {1, -1}) {
      auto r = standard_rep(n, sign);
      bool rel = r.satisfies_relations();
      for (const auto& w : defining_relators(n)) rel = rel && r.evaluate(w).is_identity();
      relations[std::to_string(n) + (sign > 0 ? "+" : "-")] = rel;
      if (!rel) {
        ok = false;
        detail += "relations fail for n=" + std::to_string(n) + " sign " + std::to_string(sign) + "; ";
      }
    }
  std::mt19937_64 rng(o.seed);
  const int samples = o.quick ? 20 : 100;
  int invariant = 0;
  for (int i = 0; i < samples; ++i) {
    const int n = 4 + i % (max_n - 3);
    const int g = (n - 1) / 2 + 2;
    const auto base = standard_rep(n, i % 2 == 0 ? 1 : -1, g);
    IntegerSymplecticMatrix phi = i == 0   ? IntegerSymplecticMatrix::identity(g)
                                  : i == 1 ? IntegerSymplecticMatrix::minus_identity(g)
                                           : random_commuting_element(n, g, rng);
    const BraidWord w(n, {1, -3});
    if (transvect_representation(base, phi).evaluate(w) == base.evaluate(w)) {
      ++invariant;
    } else {
      ok = false;
      detail += "sigma_1 sigma_3^-1 image changed for sample " + std::to_string(i) + "; ";
    }
  }
  ev = {{"relations", relations}, {"transvections_checked", samples}, {"invariant", invariant}};
  return ok;
}

bool criterion6(const AcceptanceOptions& o, nlohmann::json& ev, std::string& detail) {
  auto chain = verify_chain_relation(2);
  bool lantern = verify_lantern(genus3_lantern());
  auto h22 = humphries_generation_check(2, 2);
  bool ok = chain.p10_is_identity && chain.p5_is_minus_identity && lantern && h22.closure_size == 720;
  ev = {{"chain", to_json(chain)}, {"lantern", lantern}, {"humphries_2_2", to_json(h22)}};
  if (!o.quick) {
    auto h23 = humphries_generation_check(2, 3);
    ev["humphries_2_3"] = to_json(h23);
    ok = ok && h23.closure_size == 51840;
  }
  if (!ok) detail = ev.dump();
  return ok;
}

bool criterion7(const AcceptanceOptions&, nlohmann::json& ev, std::string& detail) {
  bool ok = true;
  ev = {{"genus", nlohmann::json::object()}, {"d2", nlohmann::json::object()}, {"d3", nlohmann::json::array()}};
  for (int n : {6, 8, 10}) {
    int g = superelliptic_genus(3, n);
    ev["genus"][std::to_string(n)] = g;
    if (g != n - 2 || g != 2 * (n / 2 - 1)) {
      ok = false;
      detail += "genus mismatch at n=" + std::to_string(n) + "; ";
    }
  }
  for (int n : {4, 6, 8}) {
    bool same = compare_d2_with_standard(n);
    ev["d2"][std::to_string(n)] = same;
    if (!same) {
      ok = false;
      detail += "d=2 differs from standard at n=" + std::to_string(n) + "; ";
    }
  }
  for (int n : {6, 8}) {
    auto r = d3_not_transvection_check(n);
    ev["d3"].push_back(to_json(r));
    if (r.verdict != "certified") {
      ok = false;
      detail += "d=3 check at n=" + std::to_string(n) + " is " + r.verdict + "; ";
    }
  }
  return ok;
}

bool criterion8(const AcceptanceOptions&, nlohmann::json& ev, std::string& detail) {
  bool ok = true;
  std::size_t pairs = 0;
  for (int g = 0; g <= 60; ++g)
    for (int k = 1; k <= 40; ++k) {
      ++pairs;
      if (!prop31_holds(g, k)) {
        ok = false;
        detail += "classifier fails at (g,k)=(" + std::to_string(g) + "," + std::to_string(k) + "); ";
      }
    }
  std::size_t gate_tuples = 0;
  for (int n = 26; n <= 60; ++n)
    for (int g = 0; g <= n - 3; ++g) {
      ++gate_tuples;
      BigInt k = n / 2;
      if (!(k * k - k > BigInt(6) * g + 6)) {
        ok = false;
        detail += "gate fails at (n,g)=(" + std::to_string(n) + "," + std::to_string(g) + "); ";
      }
    }
  ev = {{"pairs", pairs}, {"gate_tuples", gate_tuples}};
  return ok;
}

bool criterion9(const AcceptanceOptions& o, nlohmann::json& ev, std::string& detail) {
  bool ok = true;
  ev = nlohmann::json::object();
  const std::size_t max_m = o.quick ? 5 : 6;
  for (std::size_t m = 1; m <= max_m; ++m) {
    auto r = scan_totally_symmetric_sets(m, 3);
    ev[std::to_string(m)] = r.sets_by_size;
    if (!r.violations.empty()) {
      ok = false;
      detail += "order bound violated in degree " + std::to_string(m) + ": " +
                nlohmann::json(r.violations.front()).dump() + "; ";
    }
  }
  return ok;
}

bool criterion10(const AcceptanceOptions&, nlohmann::json& ev, std::string& detail) {
  bool ok = true;
  ev = nlohmann::json::object();
  for (const auto& c : audit::builtin_ledger().cases) {
    auto r = audit::run_case(c, audit::kDefaultMargin);
    ev[c.id] = {{"tuples", r.tuples}, {"violations", r.violation_count}};
    if (r.violation_count != 0) {
      ok = false;
      detail += c.id + ": " + audit::to_json(r)["violations"].dump() + "; ";
    }
  }
  return ok;
}

bool criterion11(const AcceptanceOptions& o, nlohmann::json& ev, std::string& detail) {
  const int n = 5;
  SearchOptions s = search_options(o, std::chrono::minutes(1));
  Enumeration e = enumerate_homs(n, 5, s);
  std::mt19937_64 rng(o.seed + 11);
  std::vector<BraidWord> words;
  std::size_t rejected = 0;
  while (words.size() < 100) {
    BraidWord w = random_trivial_word(n, rng);
    if (is_identity(w))
      words.push_back(std::move(w));
    else
      ++rejected;
  }
  bool ok = rejected == 0;
  if (!ok) detail += "oracle rejected " + std::to_string(rejected) + " relator products; ";
  std::size_t evaluations = 0;
  for (const auto& h : e.orbits)
    for (const auto& w : words) {
      ++evaluations;
      if (!h.evaluate(w).is_identity()) {
        ok = false;
        detail += "hom " + nlohmann::json(h.gen_images).dump() + " moves word " + w.to_string() + "; ";
        break;
      }
    }
  ev = {{"orbits", e.orbits.size()}, {"words", words.size()}, {"evaluations", evaluations}};
  return ok;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> table{criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                                        criterion7, criterion8, criterion9, criterion10, criterion11};
  return table;
}

}  // namespace

std::vector<int> acceptance_ids() {
  std::vector<int> ids;
  for (std::size_t i = 1; i <= criteria().size(); ++i) ids.push_back(static_cast<int>(i));
  return ids;
}

std::string criterion_title(int id) {
  if (id < 1 || id > static_cast<int>(criteria().size())) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  return criteria()[static_cast<std::size_t>(id - 1)].title;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  r.limit_ms = criteria()[static_cast<std::size_t>(id - 1)].limit_ms;
  const auto start = Clock::now();
  bool holds = false;
  try {
    holds = checks()[static_cast<std::size_t>(id - 1)](options, r.evidence, r.detail);
  } catch (const BudgetExceeded& e) {
    r.budget_exceeded = true;
    r.detail = "search budget exhausted after " + std::to_string(e.completed_fraction() * 100) + "% of the tree";
  } catch (const ResourceLimitExceeded& e) {
    r.budget_exceeded = true;
    r.detail = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const bool in_time = r.elapsed_ms <= r.limit_ms;
  if (holds && !in_time)
    r.detail += "took " + std::to_string(r.elapsed_ms) + " ms, limit " + std::to_string(r.limit_ms) + " ms";
  r.passed = holds && in_time && !r.budget_exceeded;
  return r;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id},
          {"title", r.title},
          {"passed", r.passed},
          {"budget_exceeded", r.budget_exceeded},
          {"elapsed_ms", r.elapsed_ms},
          {"limit_ms", r.limit_ms},
          {"detail", r.detail},
          {"evidence", r.evidence}};
}

}  // namespace braidrep
