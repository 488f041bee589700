#include "braidrep/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace braidrep::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("braid-power report") {
    auto r = run({"symp", "braid-power", "--g", "2", "--kmax", "10"});
    CHECK(r.code == 0);
    auto j = r.report();
    CHECK(j["payload"] == nlohmann::json::parse(R"({"set":[-1,0,1]})"));
    CHECK(j["verdict"] == "pass");
    CHECK(j["command"] == "symp braid-power");
    CHECK(j["parameters"]["g"] == 2);
  }

  TEST_CASE("usage errors exit 2") {
    auto r = run({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown subcommand") != std::string::npos);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"symp", "braid-power", "--g", "x"}).code == 2);
    CHECK(run({"homsearch", "--n", "7"}).code == 2);
    CHECK(run({"audit", "run", "--case", "A99"}).code == 2);
    CHECK(run({"--format", "yaml", "symp", "lantern"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("tiny budget exits 3") {
    auto r = run({"homsearch", "--n", "7", "--m", "8", "--transitive-only", "--max-nodes", "1"});
    CHECK(r.code == 3);
    auto j = r.report();
    CHECK(j["verdict"] == "budget-exceeded");
    CHECK(j["payload"]["complete"] == false);
    CHECK(run({"--budget-ms", "1", "homsearch", "--n", "7", "--m", "8", "--transitive-only"}).code == 3);
  }

  TEST_CASE("budget from the environment") {
    ::setenv("BRAIDREP_BUDGET_MS", "1", 1);
    CHECK(budget_from_environment() == 1);
    auto r = run({"homsearch", "--n", "7", "--m", "8", "--transitive-only"});
    ::unsetenv("BRAIDREP_BUDGET_MS");
    CHECK(r.code == 3);
    CHECK_FALSE(budget_from_environment().has_value());
  }

  TEST_CASE("reports are stable apart from elapsed time") {
    auto strip = [](nlohmann::json j) {
      j.erase("elapsed_ms");
      return j.dump();
    };
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"homsearch", "--n", "5", "--m", "5"},
             {"tss", "classify", "--k", "13", "--g", "23"},
             {"superelliptic", "verify", "--n", "6", "--d", "3"},
             {"audit", "run", "--case", "A8"}}) {
      auto a = run(args), b = run(args);
      CHECK(a.code == 0);
      CHECK(strip(a.report()) == strip(b.report()));
    }
  }

  TEST_CASE("subcommand payloads") {
    auto tss = run({"tss", "classify", "--k", "13", "--g", "23"}).report();
    CHECK(tss["payload"]["allowed"] == nlohmann::json::parse("[0,1,12,13]"));
    CHECK(tss["payload"]["capacity"] == 72);
    auto audit = run({"audit", "run", "--case", "A8", "--format", "json"}).report();
    CHECK(audit["payload"]["case"] == "A8");
    CHECK(audit["payload"]["violations"] == nlohmann::json::array());
    auto hs = run({"homsearch", "--n", "7", "--m", "8", "--transitive-only"}).report();
    CHECK(hs["payload"]["complete"] == true);
    CHECK(hs["payload"]["orbits"][0]["kind"] == "cyclic");
    auto artin = run({"homsearch", "verify-artin", "--n", "6"});
    CHECK(artin.code == 1);
    CHECK_FALSE(artin.report()["payload"]["counterexamples"].empty());
    auto check = run({"tss", "check", "--perms", "[[2,1,3,4],[1,2,4,3]]"}).report();
    CHECK(check["payload"]["totally_symmetric"] == true);
    CHECK(check["payload"]["group_order"] == 4);
    CHECK(run({"symp", "chain", "--g", "2"}).code == 0);
    CHECK(run({"symp", "lantern"}).code == 0);
    CHECK(run({"symp", "humphries", "--g", "2", "--p", "2"}).code == 0);
    CHECK(run({"symp", "relations", "--n", "7", "--sign", "-1"}).code == 0);
    CHECK(run({"audit", "list"}).report()["payload"]["cases"].size() == 9);
  }

  TEST_CASE("text format") {
    auto r = run({"--format", "text", "symp", "braid-power"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("symp braid-power: pass", 0) == 0);
  }

  TEST_CASE("quick acceptance suite") {
    auto r = run({"all", "--quick"});
    CHECK(r.code == 0);
    auto j = r.report();
    CHECK(j["payload"]["criteria"].size() == 11);
    CHECK(j["parameters"]["seed"] == 20240611);
    CHECK(r.err.find("criterion 11") != std::string::npos);
  }

  TEST_CASE("config file for the suite") {
    const std::string path = "braidrep_cli_test_config.json";
    {
      std::ofstream f(path);
      f << R"({"quick": true, "seed": 7, "criteria": [4, 8]})";
    }
    auto j = run({"all", "--config", path}).report();
    CHECK(j["parameters"]["seed"] == 7);
    CHECK(j["parameters"]["criteria"] == nlohmann::json::parse("[4,8]"));
    CHECK(j["verdict"] == "pass");
    auto overridden = run({"all", "--config", path, "--seed", "9", "--criterion", "4"}).report();
    CHECK(overridden["parameters"]["seed"] == 9);
    CHECK(overridden["payload"]["criteria"].size() == 1);
    std::remove(path.c_str());
    CHECK(run({"all", "--config", "does-not-exist.json"}).code == 2);
  }
}
