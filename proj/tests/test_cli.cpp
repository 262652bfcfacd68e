#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sanovcat/cli.hpp"

using namespace sanovcat;

namespace {

std::string tmp(const std::string& name) { return "sanovcat_cli_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
};

// Runs the installed binary with args, stdout and stderr captured together.
Run sh(const std::string& args, const std::string& env = "") {
  const std::string out = tmp("stdout.txt");
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" SANOVCAT_CLI "\" " + args + " > " + out + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out)};
}

nlohmann::json strip_millis(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("millis");
  return j;
}

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(sh("").code == 2);
  CHECK(sh("no-such-command").code == 2);
  CHECK(sh("verify-n4 --seed notanumber").code == 2);
  CHECK(sh("build-theta --format xml").code == 2);
  CHECK(sh("check-applicable").code == 2);
  CHECK(sh("verify-n4 --oracle-samples 0 --expr \"(x,\"").code == 2);
  CHECK(sh("--help").code == 0);
}

TEST_CASE("build-theta reports the order and exports") {
  auto r = sh("build-theta --export " + tmp("table.bin"));
  CHECK(r.code == 0);
  CHECK(r.out.find("|G| = 1024") != std::string::npos);
  CHECK(slurp(tmp("table.bin")).size() == 8 + 2u * 1024 * 1024);
  auto csv = sh("build-theta --format csv --export " + tmp("table.csv"));
  CHECK(csv.code == 0);
  CHECK(slurp(tmp("table.csv")).substr(0, 8) == "0,1,2,3,");
}

TEST_CASE("verify-n4 without the oracle") {
  auto r = sh("verify-n4 --oracle-samples 0 --identity-samples 100 --collection-words 100 --json " +
              tmp("n4.json"));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(tmp("n4.json")));
  CHECK(j["command"] == "verify-n4");
  CHECK(j["config"]["oracle_samples"] == 0);
  for (const auto& c : j["checks"]) {
    CHECK(c["name"].get<std::string>().rfind("magnus.", 0) != 0);
    CHECK(c.contains("paper_ref"));
    CHECK(c.contains("witnesses"));
    CHECK(c.contains("counts"));
    CHECK(c["status"] == "pass");
  }
}

TEST_CASE("expressions") {
  auto ok = sh("verify-n4 --oracle-samples 0 --identity-samples 10 --collection-words 10 "
               "--expr \"(x y)^4 = x^4 y^4 C3^6 C4^14 C5^4 C6 C7^11 C8^11\"");
  CHECK(ok.code == 0);
  auto bad = sh("verify-n4 --oracle-samples 0 --identity-samples 10 --collection-words 10 --expr \"x y = y x\"");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("first failure: expr.N4") != std::string::npos);
  CHECK(sh("build-theta --expr \"(x y)^4 = 1\"").code == 0);
}

TEST_CASE("determinism and environment overrides") {
  const std::string args = "verify-n4 --identity-samples 50 --collection-words 50 --oracle-samples 500 --json ";
  REQUIRE(sh(args + tmp("a.json"), "SANOVCAT_SEED=9").code == 0);
  REQUIRE(sh(args + tmp("b.json") + " --seed 9").code == 0);
  auto a = nlohmann::json::parse(slurp(tmp("a.json")));
  auto b = nlohmann::json::parse(slurp(tmp("b.json")));
  CHECK(a["config"]["seed"] == 9);
  CHECK(strip_millis(a).dump() == strip_millis(b).dump());
  REQUIRE(sh(args + tmp("c.json") + " --seed 9 --threads 3").code == 0);
  CHECK(strip_millis(nlohmann::json::parse(slurp(tmp("c.json")))).dump() == strip_millis(a).dump());
}

TEST_CASE("word search and applicability") {
  auto s = sh("search-words --stage 2 --report " + tmp("search.json"));
  CHECK(s.code == 0);
  auto j = nlohmann::json::parse(slurp(tmp("search.json")));
  CHECK(j["checks"][1]["counts"]["survivors"] == 4);
  CHECK(sh("check-applicable --alpha 1 --sample 100000").code == 0);
  auto rejected = sh("check-applicable --word \"x y C3 C4\"");
  CHECK(rejected.code == 1);
  CHECK(rejected.out.find("x o (x o y)") != std::string::npos);
  CHECK(sh("check-applicable --alpha 1 --word \"x y\"").code == 2);
}

TEST_CASE("run in process") {
  cli::RunConfig cfg;
  cfg.command = "search-words";
  cfg.stage = "1";
  std::ostringstream out, err;
  CHECK(cli::run(cfg, out, err) == 0);
  CHECK(out.str().find("PASS verbal.stage1") != std::string::npos);
  cfg.command = "bogus";
  CHECK(cli::run(cfg, out, err) == 2);
}

TEST_CASE("the whole pipeline, reduced samples") {
  auto r = sh("all --seed 42 --sample 1000000 --oracle-samples 2000 --box-samples 2000 "
              "--collection-words 200 --identity-samples 200 --naturality-samples 2");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "order of A/Y = 2");
}
