#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "monader/error.hpp"
#include "monader/expr.hpp"
#include "monader/graded.hpp"
#include "monader/lincomb.hpp"

namespace monader {

// Maybe, Set, LinComb(K) and GradComb(K) = operad ∘ LinComb(K). Every
// operation returns canonical values: normalized carriers, no ∅ carriers,
// merged like terms.

enum class SupportKind { Maybe, Set, LinComb, GradComb };

std::string_view support_name(SupportKind k);
std::optional<SupportKind> support_from_name(std::string_view name);

template <class T>
using Maybe = std::optional<T>;

struct MaybeSupport {
  template <class T>
  using M = Maybe<T>;
  static constexpr SupportKind kind = SupportKind::Maybe;

  SemiringId semiring() const { return SemiringId::Boolean; }

  template <class T>
  M<T> pure(const T& x) const {
    T c = Carrier<T>::canonical(x);
    if (Carrier<T>::vanishes(c)) return std::nullopt;
    return c;
  }
  template <class T, class F>
  auto bind(const M<T>& m, F&& f) const -> std::invoke_result_t<F&, const T&> {
    if (!m) return std::nullopt;
    return f(*m);
  }
  template <class T, class F>
  auto fmap(const M<T>& m, F&& f) const -> M<std::invoke_result_t<F&, const T&>> {
    if (!m) return std::nullopt;
    return pure(f(*m));
  }
  template <class T>
  std::vector<T> carriers(const M<T>& m) const {
    if (!m) return {};
    return {*m};
  }

  M<Expr> zero() const { return std::nullopt; }
  M<Expr> plus(const M<Expr>& a, const M<Expr>& b) const;
  M<Expr> rtimes(const M<Expr>& m, const Expr& f) const;
  M<Expr> lact(const Weight& k, const M<Expr>& m) const;
  M<Expr> ract(const M<Expr>& m, const Weight& k) const;
  M<Expr> fapply(const FnRef& f, const std::vector<M<Expr>>& args) const;
  Expr to_exp(const M<Expr>& m) const;

  M<Top> embed(const Weight& k) const;
  Weight weight_value(const M<Top>& m) const;
};

struct SetSupport {
  template <class T>
  using M = std::set<T>;
  static constexpr SupportKind kind = SupportKind::Set;

  SemiringId semiring() const { return SemiringId::Boolean; }

  template <class T>
  M<T> pure(const T& x) const {
    T c = Carrier<T>::canonical(x);
    if (Carrier<T>::vanishes(c)) return {};
    return {c};
  }
  template <class T, class F>
  auto bind(const M<T>& m, F&& f) const -> std::invoke_result_t<F&, const T&> {
    std::invoke_result_t<F&, const T&> out;
    for (const T& x : m) {
      auto r = f(x);
      out.insert(r.begin(), r.end());
    }
    return out;
  }
  template <class T, class F>
  auto fmap(const M<T>& m, F&& f) const -> M<std::invoke_result_t<F&, const T&>> {
    M<std::invoke_result_t<F&, const T&>> out;
    for (const T& x : m) {
      auto r = pure(f(x));
      out.insert(r.begin(), r.end());
    }
    return out;
  }
  template <class T>
  std::vector<T> carriers(const M<T>& m) const {
    return {m.begin(), m.end()};
  }

  M<Expr> zero() const { return {}; }
  M<Expr> plus(const M<Expr>& a, const M<Expr>& b) const;
  M<Expr> rtimes(const M<Expr>& m, const Expr& f) const;
  M<Expr> lact(const Weight& k, const M<Expr>& m) const;
  M<Expr> ract(const M<Expr>& m, const Weight& k) const;
  M<Expr> fapply(const FnRef& f, const std::vector<M<Expr>>& args) const;
  Expr to_exp(const M<Expr>& m) const;

  M<Top> embed(const Weight& k) const;
  Weight weight_value(const M<Top>& m) const;
};

struct LinCombSupport {
  template <class T>
  using M = LinComb<T>;
  static constexpr SupportKind kind = SupportKind::LinComb;

  SemiringId sr;
  SemiringId semiring() const { return sr; }

  template <class T>
  M<T> pure(const T& x) const {
    return canonical(LinComb<T>::single(sr, x, Weight::one(sr)));
  }
  template <class T, class F>
  auto bind(const M<T>& m, F&& f) const -> std::invoke_result_t<F&, const T&> {
    std::invoke_result_t<F&, const T&> out(sr);
    for (const auto& [x, k] : m) out.add_all(f(x).scaled(k));
    return out;
  }
  template <class T, class F>
  auto fmap(const M<T>& m, F&& f) const -> M<std::invoke_result_t<F&, const T&>> {
    M<std::invoke_result_t<F&, const T&>> out(sr);
    for (const auto& [x, k] : m) out.add(f(x), k);
    return canonical(out);
  }
  template <class T>
  std::vector<T> carriers(const M<T>& m) const {
    std::vector<T> out;
    for (const auto& [x, _] : m) out.push_back(x);
    return out;
  }

  M<Expr> zero() const { return M<Expr>(sr); }
  M<Expr> plus(const M<Expr>& a, const M<Expr>& b) const;
  M<Expr> rtimes(const M<Expr>& m, const Expr& f) const;
  M<Expr> lact(const Weight& k, const M<Expr>& m) const;
  M<Expr> ract(const M<Expr>& m, const Weight& k) const;
  M<Expr> fapply(const FnRef& f, const std::vector<M<Expr>>& args) const;
  Expr to_exp(const M<Expr>& m) const;

  M<Top> embed(const Weight& k) const;
  Weight weight_value(const M<Top>& m) const;
};

struct GradCombSupport {
  template <class T>
  using M = Graded<T>;
  static constexpr SupportKind kind = SupportKind::GradComb;

  SemiringId sr;
  SemiringId semiring() const { return sr; }

  template <class T>
  M<T> pure(const T& x) const {
    return graded_pure(sr, x);
  }
  template <class T, class F>
  auto bind(const M<T>& m, F&& f) const -> std::invoke_result_t<F&, const T&> {
    return graded_bind(m, std::forward<F>(f));
  }
  template <class T, class F>
  auto fmap(const M<T>& m, F&& f) const -> M<std::invoke_result_t<F&, const T&>> {
    return graded_fmap(m, std::forward<F>(f));
  }
  template <class T>
  std::vector<T> carriers(const M<T>& m) const {
    std::vector<T> out;
    for (const auto& slot : m.slots)
      for (const auto& [x, _] : slot) out.push_back(x);
    return out;
  }

  M<Expr> zero() const { return M<Expr>{sr, OperadTerm::sum(0), {}}; }
  M<Expr> plus(const M<Expr>& a, const M<Expr>& b) const;
  M<Expr> rtimes(const M<Expr>& m, const Expr& f) const;
  M<Expr> lact(const Weight& k, const M<Expr>& m) const;
  M<Expr> ract(const M<Expr>& m, const Weight& k) const;
  M<Expr> fapply(const FnRef& f, const std::vector<M<Expr>>& args) const;
  Expr to_exp(const M<Expr>& m) const;

  M<Top> embed(const Weight& k) const;
  Weight weight_value(const M<Top>& m) const;
  // Weight-level product: (o, L) ⊠ (o', L') = (Prod(o, o'), L ++ L').
  M<Top> times(const M<Top>& a, const M<Top>& b) const;
};

// ---------------------------------------------------------------------------
// Runtime selection.

struct SupportId {
  SupportKind kind;
  SemiringId semiring;

  friend bool operator==(const SupportId&, const SupportId&) = default;
};

// Maybe and Set run over the Boolean semiring only. Throws SupportMismatch.
void validate(const SupportId& id);
std::string to_string(const SupportId& id);

using AnySupport = std::variant<MaybeSupport, SetSupport, LinCombSupport, GradCombSupport>;
// Throws SupportMismatch.
AnySupport make_support(const SupportId& id);

// Monadic value of any support, alternatives in SupportKind order.
template <class T>
using ValueOf = std::variant<Maybe<T>, std::set<T>, LinComb<T>, Graded<T>>;
using SupportValue = ValueOf<Expr>;

template <class S, class T>
const typename S::template M<T>& value_as(const ValueOf<T>& v) {
  const auto* p = std::get_if<typename S::template M<T>>(&v);
  if (!p) throw SupportMismatch("value does not belong to the " + std::string(support_name(S::kind)) + " support");
  return *p;
}

// Calls f(support) with the concrete support struct.
template <class F>
decltype(auto) with_support(const SupportId& id, F&& f) {
  AnySupport s = make_support(id);
  return std::visit(std::forward<F>(f), s);
}

SupportKind kind_of(const SupportValue& v);

SupportValue sv_pure(const SupportId& id, const Expr& e);
SupportValue sv_zero(const SupportId& id);
SupportValue sv_plus(const SupportId& id, const SupportValue& a, const SupportValue& b);
SupportValue sv_rtimes(const SupportId& id, const SupportValue& m, const Expr& f);
SupportValue sv_lact(const SupportId& id, const Weight& k, const SupportValue& m);
SupportValue sv_ract(const SupportId& id, const SupportValue& m, const Weight& k);
SupportValue sv_fapply(const SupportId& id, const FnRef& f, const std::vector<SupportValue>& args);
Expr sv_to_exp(const SupportId& id, const SupportValue& m);
std::vector<Expr> sv_carriers(const SupportValue& m);

// Human-readable rendering, one entry per line:
//   maybe: the carrier or "nil"; set: one carrier per line;
//   lincomb: "k ⊙ expr"; gradcomb: "op: ..." then "slot i: k ⊙ expr".
std::string render(const SupportValue& m);

// GradComb toExp without a support object.
Expr graded_to_exp(const Graded<Expr>& g);

}  // namespace monader
