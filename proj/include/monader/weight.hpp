#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace monader {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class SemiringId { Boolean, Nat, Int, Rat };

std::string_view semiring_name(SemiringId id);
// Accepts the CLI spellings: bool, nat, int, rat.
std::optional<SemiringId> semiring_from_name(std::string_view name);

// + is idempotent (k + k = k); gates duplicate merging in sums.
bool is_idempotent(SemiringId id);
// Every element has a star (k* = 1 + k k*).
bool is_starred(SemiringId id);

// An element of one of the four exact weight semirings. Naturals and integers
// are unbounded; rationals are kept in lowest terms with a positive
// denominator (guaranteed by cpp_rational).
class Weight {
 public:
  static Weight zero(SemiringId sr);
  static Weight one(SemiringId sr);
  static Weight boolean(bool b);
  static Weight natural(BigInt n);
  static Weight integer(BigInt n);
  static Weight rational(Rational q);
  // Lifts a small integer literal into `sr`; fails for negatives in Nat.
  static Weight from_int(SemiringId sr, long long v);

  // Parses a literal using the lexeme rules of `sr`. Throws BadWeightLiteral.
  static Weight parse(SemiringId sr, std::string_view text);

  SemiringId semiring() const noexcept { return sr_; }

  bool is_zero() const;
  bool is_one() const;

  bool as_bool() const;
  const BigInt& as_integer() const;
  Rational as_rational() const;

  // Canonical text: true/false, decimal integers, p/q for non-integral
  // rationals.
  std::string to_string() const;

  // Numeric order (false < true). Used by Min/Max/ExtDist.
  std::strong_ordering numeric_compare(const Weight& other) const;

  friend bool operator==(const Weight& a, const Weight& b);

 private:
  Weight(SemiringId sr, std::variant<bool, BigInt, Rational> v) : sr_(sr), v_(std::move(v)) {}

  SemiringId sr_;
  std::variant<bool, BigInt, Rational> v_;
};

Weight sr_add(const Weight& a, const Weight& b);
Weight sr_mul(const Weight& a, const Weight& b);
inline Weight sr_zero(SemiringId sr) { return Weight::zero(sr); }
inline Weight sr_one(SemiringId sr) { return Weight::one(sr); }
bool sr_eq(const Weight& a, const Weight& b);
// Boolean: always defined (k* = 1). Nat/Int/Rat: defined only at 0, 0* = 1.
std::optional<Weight> sr_star(const Weight& a);

// Ordering by canonical text, as used for the structural order on
// expressions.
std::strong_ordering text_compare(const Weight& a, const Weight& b);

}  // namespace monader
