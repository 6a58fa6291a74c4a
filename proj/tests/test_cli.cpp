#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "idealforge/cli.hpp"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = idealforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Outcome& o) { return Json::parse(o.out); }

}  // namespace

TEST_CASE("split over the fifth cyclotomic field") {
  const auto o = run({"split", "--poly", "x^4+x^3+x^2+x+1", "--q", "11"});
  REQUIRE(o.code == 0);
  const Json d = json_of(o);
  CHECK(d["ok"] == true);
  CHECK(d["result"]["prime_count"] == 4);
  for (const auto& p : d["result"]["primes"]) CHECK(p["residue_degree"] == 1);
  CHECK(d["result"]["fully_split"] == true);
}

TEST_CASE("degenerate and reducible polynomials are rejected") {
  for (const char* poly : {"x^2", "x^3-x-6", "x^2-1"}) {
    const auto o = run({"split", "--poly", poly, "--q", "7"});
    CHECK(o.code == 1);
    const Json d = json_of(o);
    CHECK(d["ok"] == false);
    CHECK(d["error"]["kind"] == "InvalidArgument");
    CHECK_FALSE(o.err.empty());
  }
  CHECK(run({"split", "--poly", "2*x^2+1", "--q", "7"}).code == 1);
  CHECK(json_of(run({"split", "--poly", "2*x^2+1", "--q", "7"}))["error"]["kind"] == "NotMonic");
}

TEST_CASE("thm2-search refutes the congruence") {
  const auto o = run({"thm2-search", "--p", "3", "--q", "7", "--s", "2", "--trials", "100", "--seed", "1"});
  REQUIRE(o.code == 0);
  const Json r = json_of(o)["result"];
  CHECK(r["certificate_count"].get<int>() >= 1);
  const Json& first = r["certificates"][0];
  CHECK(first["trial"] == 0);
  CHECK(first["element"] == Json::parse("[3, -5]"));
  CHECK(first["residue"] == 42);
  CHECK(first["reverified"] == true);
}

TEST_CASE("thm2-check in the Gaussian integers") {
  const auto o = run({"thm2-check", "--poly", "x^2+1", "--q", "5", "--a", "2", "--s", "2", "--elem", "[3,-4]"});
  REQUIRE(o.code == 0);
  const Json r = json_of(o)["result"];
  CHECK(r["classification"] == "counterexample");
  CHECK(r["residue"] == 20);
  CHECK(r["proof_step"]["step_holds"] == false);
}

TEST_CASE("other subcommands") {
  CHECK(json_of(run({"divides", "--p", "3", "--q", "7", "--a", "2", "--elem", "[3,-5]"}))["result"]["divides"] == true);
  CHECK(json_of(run({"member", "--p", "3", "--q", "7", "--a", "2", "--s", "2", "--elem", "49"}))["result"]["member"] == true);
  CHECK(json_of(run({"valuation", "--p", "5", "--q", "11", "--a", "3", "--elem", "t-3"}))["result"]["valuation"]["value"] == 2);
  const Json norms = json_of(run({"cyclo-norms", "--p", "3", "--x", "2", "--y", "1", "--q", "7"}))["result"];
  CHECK(norms["norm_one_minus_zeta"] == 3);
  CHECK(norms["pair"]["product"] == 9);
  CHECK(norms["norm_bound"].size() == 2);
  CHECK(json_of(run({"ramify", "--p", "7"}))["result"]["passed"] == true);
  CHECK(json_of(run({"roots-count", "--p", "5", "--q", "11"}))["result"]["count"] == 5);
  const Json trace = json_of(run({"lemma-trace", "--p", "3", "--q", "7", "--x", "1", "--y", "2", "--z", "14"}))["result"];
  CHECK(trace["steps"].size() == 9);
  CHECK(trace["summary"]["premise_chain_broken_at"] == 5);
}

TEST_CASE("exit codes and diagnostics") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"split", "--q", "7"}).code == 1);
  CHECK(run({"split", "--poly", "x^2+1", "--p", "3", "--q", "7"}).code == 1);
  CHECK(run({"split", "--poly", "x^2+1", "--q", "8"}).code == 1);
  CHECK(run({"split", "--poly", "x^2+1", "--q", "seven"}).code == 1);
  CHECK(run({"roots-count", "--p", "3", "--q", "3"}).code == 1);
  CHECK(run({"thm2-search", "--p", "3", "--q", "7", "--s", "1"}).code == 1);
  CHECK(json_of(run({"thm2-search", "--p", "3", "--q", "7", "--s", "1"}))["error"]["kind"] == "SPowerTooSmall");
  CHECK(run({"split", "--poly", "x^2+1", "--q", "7", "--format", "xml"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  const auto text = run({"roots-count", "--p", "3", "--q", "3", "--format", "text"});
  CHECK(text.code == 1);
  CHECK(text.out.empty());
  CHECK(text.err.find("SamePrime") != std::string::npos);
}

TEST_CASE("text output is line-oriented") {
  const auto o = run({"roots-count", "--p", "3", "--q", "7", "--format", "text"});
  REQUIRE(o.code == 0);
  CHECK(o.out.find("result.count: 3\n") != std::string::npos);
  CHECK(o.out.find("command: roots-count\n") != std::string::npos);
}

TEST_CASE("seeded runs are byte-identical") {
  const std::vector<std::string> args{"thm2-search", "--poly", "x^3-2", "--q", "5", "--s", "3",
                                      "--trials", "60", "--seed", "7"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  auto threaded = args;
  threaded.insert(threaded.end(), {"--workers", "4"});
  CHECK(json_of(run(threaded))["result"]["certificates"] == json_of(a)["result"]["certificates"]);
}

TEST_CASE("IDEALFORGE_SEED supplies the default seed") {
  const std::vector<std::string> base{"thm2-search", "--p", "5", "--q", "11", "--s", "2", "--trials", "20"};
  ::setenv("IDEALFORGE_SEED", "9", 1);
  const auto from_env = run(base);
  ::unsetenv("IDEALFORGE_SEED");
  auto explicit_seed = base;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "9"});
  const auto from_flag = run(explicit_seed);
  REQUIRE(from_env.code == 0);
  CHECK(from_env.out == from_flag.out);
  CHECK(json_of(run(base))["result"]["seed"] == 1);

  ::setenv("IDEALFORGE_SEED", "abc", 1);
  CHECK(run(base).code == 1);
  ::unsetenv("IDEALFORGE_SEED");
}
