#pragma once

#include <compare>
#include <map>
#include <utility>

#include "monader/error.hpp"
#include "monader/expr.hpp"
#include "monader/weight.hpp"

namespace monader {

// The one-element set 𝟙; monadic values over Top are weights.
struct Top {
  friend auto operator<=>(const Top&, const Top&) = default;
};

// How monadic values treat their carriers. Expressions are kept normalized
// and ∅ carriers are dropped (they denote the zero series, i.e. the sink).
template <class T>
struct Carrier {
  static T canonical(const T& x) { return x; }
  static bool vanishes(const T&) { return false; }
};

template <>
struct Carrier<Expr> {
  static Expr canonical(const Expr& e) { return normalize(e); }
  static bool vanishes(const Expr& e) { return e.is(ExprKind::Empty); }
};

// Finite formal sum of (coefficient, carrier) pairs with like terms merged
// ((k, s) ⊞ (k', s) = (k + k', s)). Zero coefficients are never stored.
template <class T>
class LinComb {
 public:
  explicit LinComb(SemiringId sr) : sr_(sr) {}

  static LinComb single(SemiringId sr, T x, const Weight& k) {
    LinComb out(sr);
    out.add(std::move(x), k);
    return out;
  }

  // ⊞ one term. Throws SemiringMismatch.
  void add(T x, const Weight& k) {
    if (k.semiring() != sr_) throw SemiringMismatch("linear combination coefficient");
    if (k.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
      terms_.emplace(std::move(x), k);
      return;
    }
    Weight merged = sr_add(it->second, k);
    if (merged.is_zero()) {
      terms_.erase(it);
    } else {
      it->second = std::move(merged);
    }
  }

  void add_all(const LinComb& other) {
    for (const auto& [x, k] : other.terms_) add(x, k);
  }

  // k ⊗ R: every coefficient multiplied on the left by k.
  LinComb scaled(const Weight& k) const {
    LinComb out(sr_);
    for (const auto& [x, c] : terms_) out.add(x, sr_mul(k, c));
    return out;
  }

  SemiringId semiring() const { return sr_; }
  const std::map<T, Weight>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Weight coefficient_sum() const {
    Weight acc = Weight::zero(sr_);
    for (const auto& [_, k] : terms_) acc = sr_add(acc, k);
    return acc;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  SemiringId sr_;
  std::map<T, Weight> terms_;
};

// Carriers re-canonicalized, vanishing ones dropped, like terms re-merged.
template <class T>
LinComb<T> canonical(const LinComb<T>& l) {
  LinComb<T> out(l.semiring());
  for (const auto& [x, k] : l) {
    T c = Carrier<T>::canonical(x);
    if (!Carrier<T>::vanishes(c)) out.add(std::move(c), k);
  }
  return out;
}

}  // namespace monader
