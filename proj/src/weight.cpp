#include "monader/weight.hpp"

#include <cctype>

#include "monader/error.hpp"

namespace monader {

namespace {

void require_same(const Weight& a, const Weight& b, const char* op) {
  if (a.semiring() != b.semiring()) {
    throw SemiringMismatch(std::string(op) + ": " + std::string(semiring_name(a.semiring())) +
                           " vs " + std::string(semiring_name(b.semiring())));
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// -?[0-9]+
bool is_signed_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

std::string_view semiring_name(SemiringId id) {
  switch (id) {
    case SemiringId::Boolean: return "bool";
    case SemiringId::Nat: return "nat";
    case SemiringId::Int: return "int";
    case SemiringId::Rat: return "rat";
  }
  return "?";
}

std::optional<SemiringId> semiring_from_name(std::string_view name) {
  if (name == "bool") return SemiringId::Boolean;
  if (name == "nat") return SemiringId::Nat;
  if (name == "int") return SemiringId::Int;
  if (name == "rat") return SemiringId::Rat;
  return std::nullopt;
}

bool is_idempotent(SemiringId id) { return id == SemiringId::Boolean; }
bool is_starred(SemiringId id) { return id == SemiringId::Boolean; }

Weight Weight::zero(SemiringId sr) { return from_int(sr, 0); }
Weight Weight::one(SemiringId sr) { return from_int(sr, 1); }
Weight Weight::boolean(bool b) { return Weight(SemiringId::Boolean, b); }

Weight Weight::natural(BigInt n) {
  if (n < 0) throw BadWeightLiteral("negative value in nat: " + n.str());
  return Weight(SemiringId::Nat, std::move(n));
}

Weight Weight::integer(BigInt n) { return Weight(SemiringId::Int, std::move(n)); }
Weight Weight::rational(Rational q) { return Weight(SemiringId::Rat, std::move(q)); }

Weight Weight::from_int(SemiringId sr, long long v) {
  switch (sr) {
    case SemiringId::Boolean: return boolean(v != 0);
    case SemiringId::Nat: return natural(BigInt(v));
    case SemiringId::Int: return integer(BigInt(v));
    case SemiringId::Rat: return rational(Rational(v));
  }
  throw SemiringMismatch("unknown semiring");
}

Weight Weight::parse(SemiringId sr, std::string_view text) {
  auto bad = [&]() {
    return BadWeightLiteral("'" + std::string(text) + "' is not a " +
                            std::string(semiring_name(sr)) + " literal");
  };
  switch (sr) {
    case SemiringId::Boolean:
      if (text == "1" || text == "true") return boolean(true);
      if (text == "0" || text == "false") return boolean(false);
      throw bad();
    case SemiringId::Nat:
      if (!all_digits(text)) throw bad();
      return natural(BigInt(std::string(text)));
    case SemiringId::Int:
      if (!is_signed_decimal(text)) throw bad();
      return integer(BigInt(std::string(text)));
    case SemiringId::Rat: {
      auto slash = text.find('/');
      std::string_view num = text.substr(0, slash);
      if (!is_signed_decimal(num)) throw bad();
      Rational q{BigInt(std::string(num))};
      if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(den) || den.front() == '0') throw bad();
        q /= Rational(BigInt(std::string(den)));
      }
      return rational(std::move(q));
    }
  }
  throw bad();
}

bool Weight::is_zero() const {
  return std::visit([](const auto& v) -> bool {
    using V = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<V, bool>) return !v;
    else return v == 0;
  }, v_);
}

bool Weight::is_one() const {
  return std::visit([](const auto& v) -> bool {
    using V = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<V, bool>) return v;
    else return v == 1;
  }, v_);
}

bool Weight::as_bool() const { return std::get<bool>(v_); }
const BigInt& Weight::as_integer() const { return std::get<BigInt>(v_); }

Rational Weight::as_rational() const {
  return std::visit([](const auto& v) -> Rational {
    using V = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<V, bool>) return Rational(v ? 1 : 0);
    else if constexpr (std::is_same_v<V, BigInt>) return Rational(v);
    else return v;
  }, v_);
}

std::string Weight::to_string() const {
  return std::visit([](const auto& v) -> std::string {
    using V = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<V, bool>) return v ? "true" : "false";
    else return v.str();
  }, v_);
}

std::strong_ordering Weight::numeric_compare(const Weight& other) const {
  require_same(*this, other, "compare");
  Rational a = as_rational();
  Rational b = other.as_rational();
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const Weight& a, const Weight& b) { return a.sr_ == b.sr_ && a.v_ == b.v_; }

Weight sr_add(const Weight& a, const Weight& b) {
  require_same(a, b, "add");
  switch (a.semiring()) {
    case SemiringId::Boolean: return Weight::boolean(a.as_bool() || b.as_bool());
    case SemiringId::Nat: return Weight::natural(a.as_integer() + b.as_integer());
    case SemiringId::Int: return Weight::integer(a.as_integer() + b.as_integer());
    case SemiringId::Rat: return Weight::rational(a.as_rational() + b.as_rational());
  }
  throw SemiringMismatch("add: unknown semiring");
}

Weight sr_mul(const Weight& a, const Weight& b) {
  require_same(a, b, "mul");
  switch (a.semiring()) {
    case SemiringId::Boolean: return Weight::boolean(a.as_bool() && b.as_bool());
    case SemiringId::Nat: return Weight::natural(a.as_integer() * b.as_integer());
    case SemiringId::Int: return Weight::integer(a.as_integer() * b.as_integer());
    case SemiringId::Rat: return Weight::rational(a.as_rational() * b.as_rational());
  }
  throw SemiringMismatch("mul: unknown semiring");
}

bool sr_eq(const Weight& a, const Weight& b) {
  require_same(a, b, "eq");
  return a == b;
}

std::optional<Weight> sr_star(const Weight& a) {
  if (is_starred(a.semiring()) || a.is_zero()) return Weight::one(a.semiring());
  return std::nullopt;
}

std::strong_ordering text_compare(const Weight& a, const Weight& b) {
  return a.to_string() <=> b.to_string();
}

}  // namespace monader
