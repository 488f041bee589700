#include "braidrep/cli.hpp"

#include "braidrep/acceptance.hpp"
#include "braidrep/audit.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/homsearch.hpp"
#include "braidrep/superelliptic.hpp"
#include "braidrep/symp.hpp"
#include "braidrep/tss.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

namespace braidrep::cli {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::budget_exceeded:
      return "budget-exceeded";
  }
  return "fail";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::budget_exceeded:
      return 3;
    default:
      return 1;
  }
}

nlohmann::json to_json(const RunReport& r) {
  return {{"command", r.command},
          {"parameters", r.parameters.is_null() ? nlohmann::json::object() : r.parameters},
          {"verdict", to_string(r.verdict)},
          {"payload", r.payload},
          {"elapsed_ms", r.elapsed_ms}};
}

std::optional<long long> budget_from_environment() {
  const char* raw = std::getenv("BRAIDREP_BUDGET_MS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    long long v = std::stoll(raw);
    if (v > 0) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

namespace {

using braidrep::to_json;

nlohmann::json vector_json(const IntVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(bigint_json(v(i)));
  return out;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  long long budget_ms = 0;  // 0: take BRAIDREP_BUDGET_MS or the command default
};

Verdict from_bool(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

std::optional<std::chrono::milliseconds> wall_budget(const Globals& g) {
  if (g.budget_ms > 0) return std::chrono::milliseconds(g.budget_ms);
  if (auto env = budget_from_environment()) return std::chrono::milliseconds(*env);
  return std::nullopt;
}

SearchOptions search_options(const Globals& g) {
  SearchOptions s;
  s.workers = g.workers;
  s.budget.wall_time = wall_budget(g);
  return s;
}

// --- homsearch ---------------------------------------------------------------

RunReport rigidity_report(const std::string& command, const RigidityReport& r) {
  return {command, {}, from_bool(r.holds), to_json(r), 0};
}

template <class F>
RunReport with_search_budget(const std::string& command, F&& f) {
  try {
    return f();
  } catch (const BudgetExceeded& e) {
    nlohmann::json payload = to_json(e.partial(), false);
    payload["completed_fraction"] = e.completed_fraction();
    return {command, {}, Verdict::budget_exceeded, payload, 0};
  }
}

// --- symp ----------------------------------------------------------------------

RunReport braid_power(int g, int kmax) {
  auto set = braid_power_test(g, kmax);
  return {"symp braid-power", {{"g", g}, {"kmax", kmax}}, from_bool(set == std::vector<int>{-1, 0, 1}),
          {{"set", set}}, 0};
}

RunReport chain(int g) {
  auto r = verify_chain_relation(g);
  // Only the two-holed-torus chain has P^5 = -I; longer chains just need P^10 = I.
  bool ok = r.p10_is_identity && (g != 2 || r.p5_is_minus_identity);
  return {"symp chain", {{"g", g}}, from_bool(ok), to_json(r), 0};
}

RunReport lantern() {
  auto c = genus3_lantern();
  bool ok = verify_lantern(c);
  nlohmann::json payload{{"g", c.g}, {"holds", ok}, {"c", vector_json(c.c)}};
  for (int i = 0; i < 3; ++i) {
    payload["a"].push_back(vector_json(c.a[i]));
    payload["b"].push_back(vector_json(c.b[i]));
  }
  return {"symp lantern", {}, from_bool(ok), payload, 0};
}

RunReport humphries(int g, int p) {
  auto r = humphries_generation_check(g, p);
  return {"symp humphries", {{"g", g}, {"p", p}}, from_bool(r.generates), to_json(r), 0};
}

RunReport relations(int n, int sign) {
  auto r = standard_rep(n, sign);
  bool ok = r.satisfies_relations();
  nlohmann::json images = nlohmann::json::array();
  for (const auto& m : r.gen_images) images.push_back(to_json(m));
  return {"symp relations", {{"n", n}, {"sign", sign}}, from_bool(ok),
          {{"g", r.g}, {"relations_hold", ok}, {"images", images}}, 0};
}

// --- superelliptic ---------------------------------------------------------------

RunReport superelliptic_verify(int n, int d) {
  nlohmann::json payload{{"n", n}, {"d", d}, {"genus", superelliptic_genus(d, n)}};
  payload["relations_hold"] = burau_relations_hold(n, d);
  nlohmann::json images = nlohmann::json::array();
  for (const auto& m : burau_rep(n, d)) images.push_back(to_json(m));
  payload["images"] = images;
  Verdict v = from_bool(payload["relations_hold"].get<bool>());
  if (d == 2) {
    bool same = compare_d2_with_standard(n);
    payload["matches_standard"] = same;
    if (!same) v = Verdict::fail;
  } else {
    auto r = d3_not_transvection_check(n);
    payload["distinctions"] = to_json(r);
    if (v == Verdict::pass && r.verdict != "certified") v = Verdict::inconclusive;
  }
  return {"superelliptic verify", {{"n", n}, {"d", d}}, v, payload, 0};
}

// --- audit -----------------------------------------------------------------------

RunReport audit_run(const std::vector<std::string>& ids, int margin, const std::string& ledger_path) {
  const audit::Ledger ledger = ledger_path.empty() ? audit::builtin_ledger() : audit::load_ledger(ledger_path);
  std::vector<const audit::InequalityCase*> cases;
  if (ids.empty()) {
    for (const auto& c : ledger.cases) cases.push_back(&c);
  } else {
    for (const auto& id : ids) {
      try {
        cases.push_back(&ledger.find(id));
      } catch (const std::out_of_range&) {
        throw UsageError("unknown audit case " + id);
      }
    }
  }
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto* c : cases) {
    auto r = audit::run_case(*c, margin);
    ok = ok && r.violation_count == 0;
    reports.push_back(audit::to_json(r));
  }
  nlohmann::json payload = reports.size() == 1 ? reports.front() : nlohmann::json{{"cases", reports}};
  nlohmann::json params{{"margin", margin}};
  if (!ids.empty()) params["case"] = ids;
  if (!ledger_path.empty()) params["ledger"] = ledger_path;
  return {"audit run", params, from_bool(ok), payload, 0};
}

RunReport audit_list() {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : audit::builtin_ledger().cases) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& cl : c.clauses) clauses.push_back(cl.name);
    cases.push_back({{"id", c.id}, {"location", c.location}, {"anchor", c.anchor}, {"clauses", clauses}});
  }
  return {"audit list", {}, Verdict::pass, {{"cases", cases}}, 0};
}

// --- all -------------------------------------------------------------------------

struct SuiteConfig {
  AcceptanceOptions options;
  std::vector<int> criteria;
};

void apply_config(const std::string& path, SuiteConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (doc.contains("quick")) cfg.options.quick = doc["quick"].get<bool>();
  if (doc.contains("seed")) cfg.options.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("workers")) cfg.options.workers = doc["workers"].get<unsigned>();
  if (doc.contains("search_budget_ms"))
    cfg.options.search_budget = std::chrono::milliseconds(doc["search_budget_ms"].get<long long>());
  if (doc.contains("criteria")) cfg.criteria = doc["criteria"].get<std::vector<int>>();
}

RunReport run_all(SuiteConfig cfg, std::ostream& err) {
  if (cfg.criteria.empty()) cfg.criteria = acceptance_ids();
  bool failed = false;
  bool budget = false;
  nlohmann::json results = nlohmann::json::array();
  for (int id : cfg.criteria) {
    err << "[braidrep] criterion " << id << ": " << criterion_title(id) << "\n";
    auto r = run_criterion(id, cfg.options);
    err << "[braidrep] criterion " << id << (r.passed ? " passed" : " FAILED") << " in " << r.elapsed_ms << " ms\n";
    failed = failed || (!r.passed && !r.budget_exceeded);
    budget = budget || r.budget_exceeded;
    results.push_back(to_json(r));
  }
  Verdict v = failed ? Verdict::fail : budget ? Verdict::budget_exceeded : Verdict::pass;
  nlohmann::json params{{"quick", cfg.options.quick},
                        {"seed", cfg.options.seed},
                        {"workers", cfg.options.workers},
                        {"criteria", cfg.criteria}};
  return {"all", params, v, {{"criteria", results}}, 0};
}

// --- output ------------------------------------------------------------------------

void print_text(const RunReport& r, std::ostream& out) {
  out << r.command << ": " << to_string(r.verdict) << " (" << static_cast<long long>(r.elapsed_ms) << " ms)\n";
  if (r.command == "all") {
    for (const auto& c : r.payload["criteria"]) {
      out << "  criterion " << c["id"].get<int>() << " " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  "
          << c["title"].get<std::string>() << "  [" << static_cast<long long>(c["elapsed_ms"].get<double>())
          << " ms]";
      if (!c["detail"].get<std::string>().empty()) out << "  " << c["detail"].get<std::string>();
      out << "\n";
    }
    return;
  }
  if (!r.parameters.empty()) out << "parameters: " << r.parameters.dump() << "\n";
  out << r.payload.dump(2) << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Exact verification tools for braid group representations", "braidrep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--workers", g.workers, "Worker threads for searches")->check(CLI::Range(1u, 256u));
  app.add_option("--budget-ms", g.budget_ms, "Wall-time budget for searches; overrides BRAIDREP_BUDGET_MS")
      ->check(CLI::PositiveNumber);

  std::function<RunReport()> action;

  // homsearch [--n --m --transitive-only] | verify-artin | verify-lin-a | verify-lin-f
  auto* hs = app.add_subcommand("homsearch", "Homomorphisms B_n -> Sigma_m up to conjugation");
  hs->require_subcommand(0, 1);
  int hs_n = 0, hs_m = 0;
  bool transitive_only = false;
  std::uint64_t max_nodes = 0;
  hs->add_option("--n", hs_n, "Strands")->check(CLI::Range(3, 16));
  hs->add_option("--m", hs_m, "Permutation degree")->check(CLI::Range(1, 16));
  hs->add_flag("--transitive-only", transitive_only, "Keep transitive orbits only");
  hs->add_option("--max-nodes", max_nodes, "Search node budget");
  auto* va = hs->add_subcommand("verify-artin", "Transitive orbits for m = n are cyclic or standard");
  int va_n = 0;
  va->add_option("--n", va_n, "Strands")->required()->check(CLI::Range(5, 16));
  auto* vla = hs->add_subcommand("verify-lin-a", "Transitive orbits for 6 < n < m < 2n are cyclic");
  int vla_n = 0, vla_m = 0;
  vla->add_option("--n", vla_n, "Strands")->required();
  vla->add_option("--m", vla_m, "Permutation degree")->required();
  auto* vlf = hs->add_subcommand("verify-lin-f", "All orbits for m < n are cyclic");
  int vlf_n = 0;
  vlf->add_option("--n", vlf_n, "Strands")->required()->check(CLI::Range(5, 16));

  // tss classify | scan | check
  auto* tss = app.add_subcommand("tss", "Totally symmetric sets and labeled multicurves");
  tss->require_subcommand(1);
  auto* classify = tss->add_subcommand("classify", "Allowed label sizes for k labels in genus g");
  int tss_k = 0, tss_g = 0;
  std::string capacity_text;
  classify->add_option("--k", tss_k, "Number of labels")->required()->check(CLI::Range(1, 62));
  classify->add_option("--g", tss_g, "Genus")->required()->check(CLI::NonNegativeNumber);
  classify->add_option("--capacity", capacity_text, "Override the multicurve capacity (default 3g+3)");
  auto* scan = tss->add_subcommand("scan", "Exhaustive scan of totally symmetric sets in Sigma_m");
  std::size_t scan_m = 0, scan_k = 3;
  scan->add_option("--m", scan_m, "Degree")->required()->check(CLI::Range(1, 7));
  scan->add_option("--k", scan_k, "Largest set size")->check(CLI::Range(1, 6));
  auto* tcheck = tss->add_subcommand("check", "Total symmetry and order bound for given permutations");
  std::string perms_text;
  tcheck->add_option("--perms", perms_text, "JSON array of one-line permutations, 1-based")->required();

  // symp braid-power | chain | lantern | humphries | relations
  auto* symp = app.add_subcommand("symp", "Integral symplectic checks");
  symp->require_subcommand(1);
  auto* bp = symp->add_subcommand("braid-power", "Exponents k with T_a^k T_b T_a^-k braiding with T_a");
  int bp_g = 1, bp_kmax = 10;
  bp->add_option("--g", bp_g, "Genus")->check(CLI::Range(1, 32));
  bp->add_option("--kmax", bp_kmax, "Largest |k|")->check(CLI::Range(0, 1000));
  auto* ch = symp->add_subcommand("chain", "Chain relation on homology");
  int ch_g = 2;
  ch->add_option("--g", ch_g, "Genus")->check(CLI::Range(1, 32));
  auto* ln = symp->add_subcommand("lantern", "Lantern relation on the genus-3 configuration");
  auto* hu = symp->add_subcommand("humphries", "Closure of the Humphries transvections mod p");
  int hu_g = 2, hu_p = 2;
  hu->add_option("--g", hu_g, "Genus")->check(CLI::Range(1, 3));
  hu->add_option("--p", hu_p, "Prime")->check(CLI::IsMember({2, 3}));
  auto* rel = symp->add_subcommand("relations", "Braid relations for the standard representation");
  int rel_n = 4, rel_sign = 1;
  rel->add_option("--n", rel_n, "Strands")->check(CLI::Range(2, 64));
  rel->add_option("--sign", rel_sign, "Twist sign")->check(CLI::IsMember({-1, 1}));

  // superelliptic verify
  auto* se = app.add_subcommand("superelliptic", "Burau-type representations from cyclic covers");
  se->require_subcommand(1);
  auto* sev = se->add_subcommand("verify", "Relations, genus and comparison with the standard representation");
  int se_n = 6, se_d = 3;
  sev->add_option("--n", se_n, "Strands (even)")->required()->check(CLI::Range(2, 16));
  sev->add_option("--d", se_d, "Cover degree")->required()->check(CLI::Range(2, 12));

  // audit run | list
  auto* au = app.add_subcommand("audit", "Inequality ledger");
  au->require_subcommand(1);
  auto* aur = au->add_subcommand("run", "Check cases over their ranges");
  std::vector<std::string> case_ids;
  int margin = audit::kDefaultMargin;
  std::string ledger_path;
  aur->add_option("--case", case_ids, "Case id; repeatable, default all");
  aur->add_option("--margin", margin, "Extra range on flagged upper bounds")->check(CLI::Range(0, 1000));
  aur->add_option("--ledger", ledger_path, "Ledger JSON to use instead of the built-in one");
  auto* aul = au->add_subcommand("list", "List cases");

  // all
  auto* all = app.add_subcommand("all", "Acceptance suite");
  bool quick = false;
  std::vector<int> criteria;
  std::string config_path;
  all->add_flag("--quick", quick, "Smallest stated parameter of each criterion");
  all->add_option("--criterion", criteria, "Criterion id; repeatable, default all")->check(CLI::Range(1, 11));
  all->add_option("--config", config_path, "JSON file with quick, seed, workers, search_budget_ms, criteria");

  if (!args.empty() && !args.front().starts_with("-")) {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n\n" << app.help();
      return 2;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (hs->parsed()) {
    if (va->parsed()) {
      action = [&] {
        return with_search_budget("homsearch verify-artin", [&] {
          auto r = rigidity_report("homsearch verify-artin", verify_artin(va_n, search_options(g)));
          r.parameters = {{"n", va_n}};
          return r;
        });
      };
    } else if (vla->parsed()) {
      action = [&] {
        return with_search_budget("homsearch verify-lin-a", [&] {
          auto r = rigidity_report("homsearch verify-lin-a", verify_lin_a(vla_n, vla_m, search_options(g)));
          r.parameters = {{"n", vla_n}, {"m", vla_m}};
          return r;
        });
      };
    } else if (vlf->parsed()) {
      action = [&] {
        return with_search_budget("homsearch verify-lin-f", [&] {
          auto r = rigidity_report("homsearch verify-lin-f", verify_lin_f(vlf_n, search_options(g)));
          r.parameters = {{"n", vlf_n}};
          return r;
        });
      };
    } else {
      if (hs_n == 0 || hs_m == 0) {
        err << "error: homsearch needs --n and --m\n\n" << hs->help();
        return 2;
      }
      action = [&] {
        auto r = with_search_budget("homsearch", [&] {
          SearchOptions s = search_options(g);
          s.transitive_only = transitive_only;
          if (max_nodes > 0) s.budget.max_nodes = max_nodes;
          Enumeration e = enumerate_homs(hs_n, hs_m, s);
          return RunReport{"homsearch", {}, Verdict::pass, to_json(e, true), 0};
        });
        r.parameters = {{"n", hs_n}, {"m", hs_m}, {"transitive_only", transitive_only}};
        return r;
      };
    }
  } else if (classify->parsed()) {
    action = [&] {
      BigInt cap = capacity_text.empty() ? multicurve_capacity(tss_g) : BigInt(capacity_text);
      auto payload = tss_classify_json(tss_k, cap, tss_g);
      bool ok = payload["classifier_consistent"].get<bool>() && payload["prop31"].get<bool>();
      nlohmann::json params{{"k", tss_k}, {"g", tss_g}};
      if (!capacity_text.empty()) params["capacity"] = capacity_text;
      return RunReport{"tss classify", params, from_bool(ok), payload, 0};
    };
  } else if (scan->parsed()) {
    action = [&] {
      auto r = scan_totally_symmetric_sets(scan_m, scan_k);
      return RunReport{"tss scan",
                       {{"m", scan_m}, {"k", scan_k}},
                       from_bool(r.violations.empty()),
                       {{"sets_by_size", r.sets_by_size}, {"violations", r.violations}},
                       0};
    };
  } else if (tcheck->parsed()) {
    action = [&] {
      std::vector<Permutation> perms;
      try {
        perms = nlohmann::json::parse(perms_text).get<std::vector<Permutation>>();
      } catch (const std::exception& e) {
        throw UsageError(std::string("--perms: ") + e.what());
      }
      auto ts = is_totally_symmetric(perms);
      nlohmann::json payload{{"totally_symmetric", ts.holds}, {"witnesses", ts.witnesses}};
      if (ts.non_commuting) payload["non_commuting"] = {ts.non_commuting->first, ts.non_commuting->second};
      if (ts.unrealized_transposition) payload["unrealized_transposition"] = *ts.unrealized_transposition;
      Verdict v = Verdict::pass;
      if (ts.holds) {
        auto ob = min_order_bound_check(perms);
        payload["group_order"] = ob.group_order;
        payload["bound"] = bigint_json(ob.bound);
        payload["order_bound_holds"] = ob.holds;
        v = from_bool(ob.holds);
      }
      return RunReport{"tss check", {{"perms", nlohmann::json::parse(perms_text)}}, v, payload, 0};
    };
  } else if (bp->parsed()) {
    action = [&] { return braid_power(bp_g, bp_kmax); };
  } else if (ch->parsed()) {
    action = [&] { return chain(ch_g); };
  } else if (ln->parsed()) {
    action = [&] { return lantern(); };
  } else if (hu->parsed()) {
    action = [&] { return humphries(hu_g, hu_p); };
  } else if (rel->parsed()) {
    action = [&] { return relations(rel_n, rel_sign); };
  } else if (sev->parsed()) {
    action = [&] { return superelliptic_verify(se_n, se_d); };
  } else if (aur->parsed()) {
    action = [&] { return audit_run(case_ids, margin, ledger_path); };
  } else if (aul->parsed()) {
    action = [&] { return audit_list(); };
  } else if (all->parsed()) {
    action = [&] {
      SuiteConfig cfg;
      cfg.options.seed = g.seed;
      cfg.options.workers = g.workers;
      if (auto b = wall_budget(g)) cfg.options.search_budget = *b;
      if (!config_path.empty()) apply_config(config_path, cfg);
      // Flags given explicitly win over the config file.
      if (quick) cfg.options.quick = true;
      if (app.count("--seed") > 0) cfg.options.seed = g.seed;
      if (app.count("--workers") > 0) cfg.options.workers = g.workers;
      if (!criteria.empty()) cfg.criteria = criteria;
      return run_all(cfg, err);
    };
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    report = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitExceeded& e) {
    report.command = "error";
    report.verdict = Verdict::budget_exceeded;
    report.payload = {{"error", e.what()}};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (g.format == "json")
    out << to_json(report).dump() << "\n";
  else
    print_text(report, out);
  return exit_code(report.verdict);
}

}  // namespace braidrep::cli
