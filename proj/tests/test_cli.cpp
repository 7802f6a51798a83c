#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "uvbraid/cli.hpp"

using namespace uvbraid;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli header and nf") {
  const auto r = run({"nf", "--n", "3", "--word", "r1 s2.1"});
  REQUIRE(r.code == kExitOk);
  const auto j = r.parsed();
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "nf");
  CHECK(j["n"] == 3);
  CHECK(j["c"] == 1);
  CHECK(j["delta_nf"] == json::array({"d1.3.1"}));
  CHECK(j["perm"] == "(1 2)");
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"vcd", "--n", "7", "--c", "2"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli examples") {
  auto j = run({"vcd", "--n", "6", "--c", "1"}).parsed();
  CHECK(j["clique_number"] == 3);
  CHECK(j["vcd"] == 3);

  j = run({"howson", "--n", "4", "--c", "1"}).parsed();
  CHECK(j["howson"] == false);
  CHECK(j["p3_witness"] == json::array({"d1.2.1", "d3.4.1", "d2.1.1"}));
  CHECK(run({"howson", "--n", "3"}).parsed()["howson"] == true);

  j = run({"trivial", "--n", "4", "--c", "1", "--word", "r1 r2 s1.1 r2 r1 S2.1"}).parsed();
  CHECK(j["trivial"] == true);

  j = run({"eq", "--n", "3", "r1 s2.1 r1", "r2 s1.1 r2"}).parsed();
  CHECK(j["equal"] == true);

  j = run({"pure", "--n", "3", "--word", "s1.1 r1"}).parsed();
  CHECK(j["pure"] == true);

  j = run({"lerf-witness", "--n", "4"}).parsed();
  CHECK(j["lerf"] == false);
  CHECK(j["f2xf2_witness"].size() == 4);

  j = run({"center-witness", "--n", "3"}).parsed();
  CHECK(j["dominating_vertices"].empty());
  CHECK(j["noncommuting_pair"]["equal"] == false);
}

TEST_CASE("cli homs and quotients") {
  auto j = run({"hom", "phi", "--n", "4", "--c", "2", "--eps", "1,0,1"}).parsed();
  CHECK(j["homomorphism"] == true);
  CHECK(j["admissible"] == true);

  j = run({"hom", "enumerate", "--n", "3", "--c", "1", "--m", "3"}).parsed();
  CHECK(j["count"] == 60);
  CHECK(j["complete"] == true);

  const auto partial = run({"hom", "enumerate", "--n", "4", "--m", "3", "--max-nodes", "10"});
  CHECK(partial.code == kExitDomainError);
  CHECK(partial.parsed()["complete"] == false);

  j = run({"ab", "--n", "3", "--c", "2", "--word", "r1 s1.1 s2.1 S1.2"}).parsed();
  CHECK(j["sigma_exponents"] == json::array({2, -1}));
  CHECK(j["rho_parity"] == 1);

  j = run({"chi", "--n", "3", "--c", "2", "--t", "1", "--word", "s1.2"}).parsed();
  CHECK(j["chi"] == 0);

  j = run({"quot", "eval", "--n", "3", "--d", "2", "--word", "s1.1"}).parsed();
  CHECK(j["vec"] == json::array({1}));

  j = run({"quot", "order", "--n", "5", "--c", "2", "--d", "2"}).parsed();
  CHECK(j["order"] == 480);
}

TEST_CASE("cli oracle") {
  auto j = run({"oracle", "eq", "--n", "3", "r1 s2.1 r1", "r2 s1.1 r2"}).parsed();
  CHECK(j["verdict"] == "ProvenEqual");
  j = run({"oracle", "eq", "--n", "3", "--depth", "3", "r1", ""}).parsed();
  CHECK(j["verdict"] == "Unknown");
}

TEST_CASE("cli graph") {
  const auto dot = run({"graph", "dot", "--n", "4"});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.rfind("graph ", 0) == 0);
  const auto j = run({"graph", "stats", "--n", "4"}).parsed();
  CHECK(j["vertices"] == 12);
  CHECK(j["edges"] == 12);
}

TEST_CASE("cli text format") {
  const auto r = run({"nf", "--n", "3", "--word", "r1 s2.1", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("perm: (1 2)") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"frobnicate"}).code == kExitUnknownCommand);
  CHECK(run({}).code != kExitOk);
  const auto bad_word = run({"nf", "--n", "3", "--word", "r9"});
  CHECK(bad_word.code == kExitDomainError);
  CHECK_FALSE(bad_word.err.empty());
  CHECK(run({"nf", "--n", "0", "--word", ""}).code == kExitDomainError);
  CHECK(run({"hom", "phi", "--n", "3", "--eps", "1,2"}).code == kExitDomainError);
  CHECK(run({"hom", "phi", "--n", "2", "--eps", "1,1"}).parsed()["admissible"].is_null());
  CHECK(run({"nf", "--bogus"}).code == kExitDomainError);
}
