#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "monader/automaton.hpp"

using namespace monader;
using testing_helpers::ex;

namespace {

const SupportId kMaybe{SupportKind::Maybe, SemiringId::Boolean};
const SupportId kSet{SupportKind::Set, SemiringId::Boolean};
const SupportId kLinNat{SupportKind::LinComb, SemiringId::Nat};
const SupportId kGradNat{SupportKind::GradComb, SemiringId::Nat};

Weight nat(long long v) { return Weight::from_int(SemiringId::Nat, v); }

std::set<std::string> labels(const DerivAutomaton& a) {
  std::set<std::string> out;
  for (const auto& s : a.states) out.insert(pretty(s));
  return out;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("single partial derivative") {
  DerivAutomaton a = build(kSet, ex("(a+b)*"), 10);
  CHECK_FALSE(a.truncated);
  REQUIRE(a.states.size() == 1);
  CHECK(a.finals[0] == Weight::boolean(true));
  CHECK(a.transitions.size() == 2);
  for (Symbol s : {'a', 'b'}) CHECK(std::get<std::set<StateId>>(a.transitions.at({0, s})) == std::set<StateId>{0});

  std::string dot = export_dot(a);
  CHECK(count(dot, "s0 -> s0") == 2);
  CHECK(count(dot, "[label=\"(a+b)*\"") == 1);
}

TEST_CASE("graded automaton of E is finite") {
  DerivAutomaton a = build(kGradNat, testing_helpers::ext_dist_e(), 50);
  CHECK_FALSE(a.truncated);
  CHECK(a.frontier.empty());
  CHECK(labels(a) == std::set<std::string>{"ExtDist(a*.b*+b*.a*,b*.a*.b*,a*.b*.a*)", "a*.b*", "a*", "b*",
                                           "b*.a*.b*", "a*.b*.a*", "b*.a*"});
  CHECK(run(a, "aaa") == nat(3));
  CHECK(run(a, "aab") == nat(0));
  CHECK(run(a, "") == nat(1));

  auto j = nlohmann::json::parse(export_json(a));
  CHECK(j["states"].size() == 7);
  CHECK(j["truncated"] == false);

  std::string dot = export_dot(a);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("ExtDist") != std::string::npos);
}

TEST_CASE("the initial state of E carries final weight 1") {
  for (const auto& id : {kLinNat, kGradNat}) {
    DerivAutomaton a = build(id, testing_helpers::ext_dist_e(), 50);
    REQUIRE(!a.states.empty());
    CHECK(a.finals[0] == nat(1));
    std::string dot = export_dot(a);
    auto line = dot.substr(dot.find("s0 ["));
    line = line.substr(0, line.find('\n'));
    CHECK(line.find("peripheries=2") != std::string::npos);
    CHECK(line.find("xlabel=\"1\"") != std::string::npos);
  }
}

TEST_CASE("infinite automata are truncated") {
  DerivAutomaton lin = build(kLinNat, testing_helpers::ext_dist_e(), 50);
  CHECK(lin.truncated);
  CHECK(lin.states.size() <= 50);
  CHECK_FALSE(lin.frontier.empty());
  CHECK(run(lin, "aaa") == nat(3));
  CHECK_THROWS_AS(run(lin, Word(60, 'a')), TruncatedAutomaton);
  CHECK(export_dot(lin).rfind("// truncated: true", 0) == 0);

  Expr F = ex(std::string("(") + testing_helpers::kExtDistE + ").c*", SemiringId::Nat);
  for (std::size_t budget : {10, 50, 100}) {
    DerivAutomaton g = build(kGradNat, F, budget);
    CHECK(g.truncated);
    CHECK(g.states.size() <= budget);
  }
  CHECK_THROWS_AS(build(kSet, ex("a"), 0), IndexOutOfRange);
  CHECK_THROWS_AS(build(kLinNat, ex("eps*", SemiringId::Nat), 5), ImproperExpression);
}

TEST_CASE("automata agree with derivatives and the oracle") {
  std::vector<Word> words = Alphabet({'a', 'b'}).words_up_to(5);
  const SupportId pairs[] = {kMaybe, kSet, {SupportKind::LinComb, SemiringId::Int}, kGradNat};
  for (const auto& id : pairs) {
    RandomExprGen g(31 + static_cast<int>(id.kind), GenOptions{id.semiring, {'a', 'b'}, 7, false});
    int built = 0;
    for (int i = 0; i < 25; ++i) {
      Expr e = g.next();
      DerivAutomaton a = build(id, e, 60, Alphabet({'a', 'b'}));
      if (a.truncated) continue;
      ++built;
      for (const auto& w : words) {
        Weight r = run(a, w);
        CHECK(r == weight(id, e, w));
        CHECK(r == oracle_weight(e, w));
      }
      std::set<std::string> seen;
      for (const auto& s : a.states) CHECK(seen.insert(pretty(normalize(s))).second);
      for (std::size_t q = 0; q < a.states.size(); ++q) CHECK(a.finals[q] == null(a.states[q]));
      if (id.kind == SupportKind::Maybe)
        for (const auto& [key, v] : a.transitions) CHECK(std::holds_alternative<Maybe<StateId>>(v));
    }
    CHECK(built > 10);
  }
}

TEST_CASE("json round trip") {
  const SupportId pairs[] = {kMaybe, kSet, kLinNat, kGradNat};
  for (const auto& id : pairs) {
    Expr e = id.semiring == SemiringId::Nat ? testing_helpers::ext_dist_e() : ex("(a+b)*.a.(b+eps)");
    DerivAutomaton a = build(id, e, 12);
    std::string text = export_json(a);
    DerivAutomaton b = import_json(text);
    CHECK(export_json(b) == text);
    CHECK(b.states == a.states);
    CHECK(b.truncated == a.truncated);
    CHECK(b.frontier == a.frontier);
    for (const auto& w : {"", "a", "ab", "aab"}) {
      bool threw_a = false, threw_b = false;
      Weight x = Weight::zero(id.semiring), y = Weight::zero(id.semiring);
      try { x = run(a, w); } catch (const TruncatedAutomaton&) { threw_a = true; }
      try { y = run(b, w); } catch (const TruncatedAutomaton&) { threw_b = true; }
      CHECK(threw_a == threw_b);
      CHECK(x == y);
    }
  }
  CHECK_THROWS_AS(import_json("{"), SyntaxError);
  CHECK_THROWS_AS(import_json("{\"support\": \"set\"}"), SyntaxError);
}

TEST_CASE("deterministic partial automata under maybe") {
  DerivAutomaton a = build(kMaybe, ex("(a.b+b)*.a"), 20);
  CHECK_FALSE(a.truncated);
  for (const auto& [key, v] : a.transitions) {
    const auto& m = std::get<Maybe<StateId>>(v);
    if (m) CHECK(*m < a.states.size());
  }
  CHECK(run(a, "aba") == Weight::boolean(true));
  CHECK(run(a, "aa") == Weight::boolean(false));
  CHECK_THROWS_AS(run(a, "ac"), TruncatedAutomaton);
}
