#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nonufd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nonufd::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli list-semirings") {
  auto r = cli({"list-semirings"});
  CHECK(r.code == 0);
  for (const char* id : {"nat", "nonneg-rational", "boolean", "tropical-min-plus", "monoid-nat", "s0"}) {
    CHECK(r.out.find(id) != std::string::npos);
  }
  auto j = nlohmann::json::parse(cli({"list-semirings", "--output", "json"}).out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 6);
  CHECK(j[5]["id"] == "s0");
  CHECK(j[5]["flags"]["equality_complete"] == false);
}

TEST_CASE("cli eval") {
  auto a = cli({"eval", "--semiring", "nat", "(T+1)*(T^4+T^2+1)", "(T^3+1)*(T^2+T+1)"});
  CHECK(a.code == 0);
  CHECK(a.out == "Equal\n");
  auto b = cli({"eval", "--semiring", "s0", "x+y", "1"});
  CHECK(b.code == 0);
  CHECK(b.out == "Equal\n");
  auto c = cli({"eval", "--semiring", "nat", "T+"});
  CHECK(c.code == 2);
  CHECK(c.err.find("column 3") != std::string::npos);
  auto d = cli({"eval", "-s", "nat", "(T+1)^2"});
  CHECK(d.out == "T^2+2*T+1\n");
  auto e = cli({"eval", "-s", "tropical", "T", "T^2"});
  CHECK(e.out == "Distinct\n");
}

TEST_CASE("cli eval reports Unknown as inconclusive") {
  auto r = cli({"eval", "-s", "s0", "--max-nodes", "1", "--max-depth", "1", "x+y^2", "x^2+y"});
  CHECK(r.out == "Unknown\n");
  CHECK(r.code == 4);
}

TEST_CASE("cli factor") {
  auto a = cli({"factor", "--semiring", "nat", "T^5+T^4+T^3+T^2+T+1"});
  CHECK(a.code == 0);
  CHECK(a.out.find("factorizations: 2") != std::string::npos);
  CHECK(a.out.find("bound 4") != std::string::npos);
  auto b = cli({"factor", "--semiring", "boolean", "T^3+T^2+T+1"});
  CHECK(b.code == 0);
  CHECK(b.out.find("factorizations: 2") != std::string::npos);
  auto c = cli({"factor", "--semiring", "tropical", "T^2+T+t(0)"});
  CHECK(c.code == 0);
  CHECK(c.out.find("Reducible (lemma2)") != std::string::npos);
  auto j = nlohmann::json::parse(cli({"factor", "-s", "nat", "T^5+T^4+T^3+T^2+T+1", "-o", "json", "--bound", "3"}).out);
  CHECK(j["bound"] == 3);
  CHECK(j["factorizations"].size() == 2);
}

TEST_CASE("cli factor: unsupported combinations exit 3") {
  CHECK(cli({"factor", "-s", "tropical", "T^3+T+t(0)"}).code == 3);
  CHECK(cli({"factor", "-s", "nat", "5"}).code == 3);
  CHECK(cli({"factor", "-s", "nat", "2*T^2+1"}).code == 3);
}

TEST_CASE("cli verify-theorem") {
  auto all = cli({"verify-theorem", "--all"});
  CHECK(all.code == 0);
  std::size_t verdicts = 0;
  for (std::size_t pos = 0; (pos = all.out.find("verdict: NotUFD", pos)) != std::string::npos; ++pos) ++verdicts;
  CHECK(verdicts == 6);
  auto s0 = cli({"verify-theorem", "--semiring", "s0"});
  CHECK(s0.out.find("case: partner (a = x, a^-1 = y)") != std::string::npos);
  auto j = nlohmann::json::parse(cli({"verify-theorem", "--semiring", "nat", "--output", "json"}).out);
  CHECK(j["case"] == "no-partner");
  CHECK(j["verdict"] == "NotUFD");
  CHECK(j["factorizations"][0] == std::vector<std::string>{"T+1", "T^4+T^2+1"});
  CHECK(j["degree_multisets"][1] == std::vector<int>{2, 3});
  CHECK(cli({"verify-theorem"}).code == 2);
  CHECK(cli({"verify-theorem", "--all", "-s", "nat"}).code == 2);
  CHECK(cli({"verify-theorem", "--intro", "-s", "boolean"}).code == 0);
  CHECK(cli({"verify-theorem", "--intro", "-s", "nat"}).code == 3);
}

TEST_CASE("cli verify-theorem is inconclusive when the budget is exhausted") {
  auto r = cli({"verify-theorem", "-s", "s0", "--max-nodes", "1", "--max-depth", "1", "--samples", "200"});
  CHECK(r.code == 4);
  CHECK(r.out.find("verdict: Inconclusive") != std::string::npos);
}

TEST_CASE("cli check-axioms") {
  CHECK(cli({"check-axioms", "--semiring", "tropical"}).code == 0);
  auto s0 = cli({"check-axioms", "--semiring", "s0", "--samples", "200"});
  CHECK(s0.code == 0);
  CHECK(s0.out.find("unknown_total=0") != std::string::npos);
  const auto first = cli({"check-axioms", "--semiring", "nat", "--seed", "7"});
  const auto second = cli({"check-axioms", "--semiring", "nat", "--seed", "7"});
  CHECK(first.out == second.out);
  CHECK(first.out.find("seed 7") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"eval", "T"}).code == 2);
  CHECK(cli({"eval", "-s", "nope", "T"}).code == 2);
  CHECK(cli({"eval", "-s", "nat", "--output", "xml", "T"}).code == 2);
  CHECK(cli({"check-axioms", "-s", "nat", "--samples", "0"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify-theorem", "--all", "-o", "json"},
           {"factor", "-s", "boolean", "T^5+T^4+T^3+T^2+T+1"},
           {"check-axioms", "-s", "s0", "--samples", "100", "-o", "json"}}) {
    CHECK(cli(args).out == cli(args).out);
  }
}
