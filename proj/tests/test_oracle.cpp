#include "doctest.h"
#include "helpers.hpp"

using namespace monader;
using testing_helpers::ex;

namespace {

Weight nat(long long v) { return Weight::from_int(SemiringId::Nat, v); }

// Compositions of n into parts of size <= m: (a+..+a^m)* on a^n.
long long compositions(int n, int m) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= m && k <= i; ++k) c[i] += c[i - k];
  return c[n];
}

}  // namespace

TEST_CASE("hand-computed weights") {
  CHECK(oracle_weight(ex("a.b"), "ab") == Weight::boolean(true));
  CHECK(oracle_weight(ex("a.b"), "ba") == Weight::boolean(false));
  CHECK(oracle_weight(ex("(a+a)*", SemiringId::Nat), "aa") == nat(4));
  Expr E = testing_helpers::ext_dist_e();
  CHECK(oracle_weight(E, "aaa") == nat(3));
  CHECK(oracle_weight(E, "aab") == nat(0));
  CHECK(oracle_weight(E, "") == nat(1));
  CHECK(oracle_weight(ex("{2}a{3}", SemiringId::Int), "a") == Weight::from_int(SemiringId::Int, 6));
  CHECK(oracle_weight(ex("Mean(a,a.a)", SemiringId::Rat), "a").to_string() == "1/2");
}

TEST_CASE("star counts compositions") {
  // a^n under (a)*: one composition; under (a + {2}a)*: 3^n; under (a+a.a)*: Fibonacci.
  Expr single = ex("a*", SemiringId::Nat);
  Expr three = ex("(a+{2}a)*", SemiringId::Nat);
  Expr fib = ex("(a+a.a)*", SemiringId::Nat);
  Expr trib = ex("(a+a.a+a.a.a)*", SemiringId::Nat);
  long long p3 = 1;
  for (int n = 0; n <= 8; ++n) {
    Word w(n, 'a');
    CHECK(oracle_weight(single, w) == nat(1));
    CHECK(oracle_weight(three, w) == nat(p3));
    CHECK(oracle_weight(fib, w) == nat(compositions(n, 2)));
    CHECK(oracle_weight(trib, w) == nat(compositions(n, 3)));
    p3 *= 3;
  }
  // (a*.a)* on a^n counts all compositions: 2^(n-1).
  Expr all = ex("(a*.a)*", SemiringId::Nat);
  for (int n = 1; n <= 8; ++n) CHECK(oracle_weight(all, Word(n, 'a')) == nat(1LL << (n - 1)));
}

TEST_CASE("bounds and properness") {
  CHECK_THROWS_AS(oracle_weight(ex("(a*)*", SemiringId::Nat), "a"), ImproperExpression);
  CHECK_THROWS_AS(oracle_weight(ex("a*"), Word(11, 'a')), WordTooLong);
  CHECK_NOTHROW(oracle_weight(ex("a*"), Word(10, 'a')));
  CHECK(oracle_weight(ex("a*"), Word(12, 'a'), OracleOptions{12}) == Weight::boolean(true));
}

TEST_CASE("enumeration") {
  Alphabet ab({'a', 'b'});
  auto m = enumerate_weights(ex("a"), 1, ab);
  CHECK(m.size() == 3);
  CHECK(m.at("") == Weight::boolean(false));
  CHECK(m.at("a") == Weight::boolean(true));
  CHECK(m.at("b") == Weight::boolean(false));

  auto eps = enumerate_weights(ex("eps"), 1, ab);
  CHECK(eps.at("") == Weight::boolean(true));
  CHECK(eps.at("a") == Weight::boolean(false));

  auto big = enumerate_weights(testing_helpers::ext_dist_e(), 3);
  CHECK(big.at("aaa") == nat(3));
  CHECK(big.at("aab") == nat(0));
}

TEST_CASE("oracle stays within the time budget at the length bound") {
  Expr E = testing_helpers::ext_dist_e();
  CHECK(oracle_weight(E, Word(10, 'a')) == nat(10));
  CHECK_NOTHROW(oracle_weight(ex("(a+b)*.(a.b)*.(b+a.a)*", SemiringId::Nat), "abababbaba"));
}
