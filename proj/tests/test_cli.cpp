#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "monader/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = monader::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kE = "ExtDist(a*.b*+b*.a*,b*.a*.b*,a*.b*.a*)";

}  // namespace

TEST_CASE("weight") {
  auto r = cli({"weight", "--support", "gradcomb", "--semiring", "nat", "--expr", kE, "--word", "aaa"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(cli({"weight", "--support", "maybe", "--semiring", "bool", "--expr", "a.b", "--word", "ab"}).out ==
        "true\n");
  CHECK(cli({"weight", "--support", "lincomb", "--semiring", "nat", "--expr", kE, "--word", "aab"}).out == "0\n");

  auto j = cli({"weight", "--support", "lincomb", "--semiring", "rat", "--expr", "{1/2}a*", "--word", "aa", "--json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["weight"] == "1/2");
  CHECK(doc["support"] == "lincomb");
}

TEST_CASE("errors map to exit codes") {
  auto bad = cli({"weight", "--expr", "a.(b", "--word", "a"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(cli({"weight", "--support", "set", "--semiring", "nat", "--expr", "a"}).code == 2);
  CHECK(cli({"weight", "--support", "list", "--expr", "a"}).code == 2);
  CHECK(cli({"weight", "--expr", "a", "--word", "A"}).code == 2);
  CHECK(cli({"weight", "--semiring", "nat", "--support", "lincomb", "--expr", "eps*", "--word", "a"}).code == 3);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("parse") {
  CHECK(cli({"parse", "--expr", "b+a"}).out == "b+a\n");
  CHECK(cli({"parse", "--expr", "b+a", "--normalize"}).out == "a+b\n");
  auto j = nlohmann::json::parse(cli({"parse", "--semiring", "nat", "--expr", kE, "--json"}).out);
  CHECK(j["null"] == "1");
  CHECK(j["proper"] == true);
}

TEST_CASE("derive") {
  auto lin = cli({"derive", "--support", "lincomb", "--semiring", "nat", "--expr", kE, "--word", "a", "--to-exp"});
  CHECK(lin.out == "ExtDist(a*.b*+a*,a*.b*,a*.b*.a*+a*)\n");
  CHECK(cli({"derive", "--expr", "a.b*"}).out == "a.b*\n");

  auto g = cli({"derive", "--support", "gradcomb", "--semiring", "nat", "--expr", kE, "--word", "aab"});
  CHECK(g.code == 0);
  CHECK(g.out == "op: ExtDist\nslot 1: 1 ⊙ b*\nslot 2: 1 ⊙ b*\nslot 3: 1 ⊙ b*.a*\n");

  auto s = cli({"derive", "--expr", "(a+b)*.a", "--word", "a"});
  CHECK(s.out == "eps\n(a+b)*.a\n");

  auto j = nlohmann::json::parse(
      cli({"derive", "--support", "lincomb", "--semiring", "nat", "--expr", "(a+a)*", "--word", "a", "--json"}).out);
  CHECK(j["to_exp"] == "{2}(a+a)*");
}

TEST_CASE("automaton") {
  auto g = cli({"automaton", "--support", "gradcomb", "--semiring", "nat", "--max-states", "50", "--format", "json",
                "--expr", kE});
  REQUIRE(g.code == 0);
  auto doc = nlohmann::json::parse(g.out);
  CHECK(doc["states"].size() == 7);
  CHECK(doc["truncated"] == false);
  CHECK(g.err.empty());

  auto l = cli({"automaton", "--support", "lincomb", "--semiring", "nat", "--max-states", "50", "--expr", kE});
  CHECK(l.code == 0);
  CHECK(l.err.find("truncated: true") != std::string::npos);
  CHECK(l.out.find("digraph") != std::string::npos);

  CHECK(cli({"automaton", "--max-states", "0", "--expr", "a"}).code == 2);
}

TEST_CASE("oracle-check") {
  auto r = cli({"oracle-check", "--max-word-len", "4", "--samples", "200", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "200/200 ok\n");
  CHECK(cli({"oracle-check", "--samples", "30", "--seed", "3"}).out ==
        cli({"oracle-check", "--samples", "30", "--seed", "3"}).out);
  CHECK(cli({"oracle-check", "--samples", "20", "--support", "gradcomb", "--semiring", "rat"}).out == "20/20 ok\n");
  CHECK(cli({"oracle-check", "--max-word-len", "11", "--samples", "1"}).code == 2);

  setenv("MONADER_MAX_ORACLE_LEN", "3", 1);
  CHECK(cli({"oracle-check", "--max-word-len", "4", "--samples", "1"}).code == 2);
  unsetenv("MONADER_MAX_ORACLE_LEN");
}
