// Runs the acceptance criteria and prints one line per criterion.
// Exit status is 0 only when every selected criterion passes.

#include "braidrep/acceptance.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria", "acceptance"};
  std::vector<int> ids;
  braidrep::AcceptanceOptions opts;
  bool json = false;
  app.add_option("--criterion", ids, "Criterion id; repeatable, default all")->check(CLI::Range(1, 11));
  app.add_flag("--quick", opts.quick, "Smallest stated parameter of each criterion");
  app.add_option("--seed", opts.seed, "Seed for randomized checks");
  app.add_option("--workers", opts.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--json", json, "Also print each result as a JSON line");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty()) ids = braidrep::acceptance_ids();

  int failed = 0;
  for (int id : ids) {
    auto r = braidrep::run_criterion(id, opts);
    std::printf("criterion %2d %s  %s  [%.1f ms of %.0f ms]%s%s\n", id,
                r.passed ? "PASS" : (r.budget_exceeded ? "BUDGET" : "FAIL"), r.title.c_str(), r.elapsed_ms,
                r.limit_ms, r.detail.empty() ? "" : "  ", r.detail.c_str());
    if (json) std::cout << braidrep::to_json(r).dump() << "\n";
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
