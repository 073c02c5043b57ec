#pragma once

#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "monader/lincomb.hpp"
#include "monader/operad.hpp"

namespace monader {

// Element of operad ∘ LinComb: an operad term of arity n applied to n slots,
// each slot a linear combination of carriers.
template <class T>
struct Graded {
  SemiringId sr;
  OperadTerm op;
  std::vector<LinComb<T>> slots;

  friend bool operator==(const Graded&, const Graded&) = default;
};

// Operad term over bare carriers (operad ∘ Id).
template <class T>
struct GradMod {
  OperadTerm op;
  std::vector<T> carriers;
};

// {k_i ↦ s_i} as Sum_n ∘ (L[k_1], .., L[k_n]) over (s_1, .., s_n), carriers in
// map order. The empty combination is Sum0 with no carriers.
template <class T>
GradMod<T> to_op(const LinComb<T>& l) {
  GradMod<T> out{OperadTerm::sum(l.size()), {}};
  std::vector<OperadTerm> scales;
  for (const auto& [x, k] : l) {
    scales.push_back(OperadTerm::scale_left(k));
    out.carriers.push_back(x);
  }
  out.op = op_compose(out.op, std::move(scales));
  return out;
}

// Flattens every slot into the operad: (o, [L_1..L_n]) ↦ o ∘ (to_op L_i).
template <class T>
GradMod<T> alpha(const Graded<T>& g) {
  GradMod<T> out{OperadTerm::id(), {}};
  std::vector<OperadTerm> ops;
  for (const auto& slot : g.slots) {
    auto m = to_op(slot);
    ops.push_back(m.op);
    out.carriers.insert(out.carriers.end(), m.carriers.begin(), m.carriers.end());
  }
  out.op = op_compose(g.op, std::move(ops));
  return out;
}

namespace detail {

inline bool is_zero_scale(const OperadTerm& o) {
  return (o.is(OperadTerm::Kind::ScaleLeft) || o.is(OperadTerm::Kind::ScaleRight)) &&
         o.scalar().is_zero();
}

inline bool is_sum0(const OperadTerm& o) {
  return o.is(OperadTerm::Kind::Sum) && o.sum_arity() == 0;
}

template <class T>
GradMod<T> tidy_term(const OperadTerm& t, std::span<const T> in, SemiringId sr);

// Children of one Sum node: single-carrier summands with equal carriers merge
// into the first occurrence with added coefficients.
template <class T>
GradMod<T> merge_summands(std::vector<GradMod<T>> parts, SemiringId sr) {
  std::vector<std::optional<Weight>> coef(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const OperadTerm& o = parts[i].op;
    if (o.is(OperadTerm::Kind::Id)) coef[i] = Weight::one(sr);
    if (o.is(OperadTerm::Kind::ScaleLeft)) coef[i] = o.scalar();
  }
  std::vector<bool> gone(parts.size(), false);
  std::vector<bool> touched(parts.size(), false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!coef[i]) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (gone[j] || !coef[j] || !(parts[j].carriers[0] == parts[i].carriers[0])) continue;
      coef[j] = sr_add(*coef[j], *coef[i]);
      touched[j] = true;
      gone[i] = true;
      break;
    }
  }
  std::vector<OperadTerm> ops;
  GradMod<T> out{OperadTerm::id(), {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (gone[i]) continue;
    if (touched[i]) {
      if (coef[i]->is_zero()) continue;
      ops.push_back(op_normalize(OperadTerm::scale_left(*coef[i])));
    } else {
      if (is_sum0(parts[i].op)) continue;
      ops.push_back(parts[i].op);
    }
    out.carriers.insert(out.carriers.end(), parts[i].carriers.begin(), parts[i].carriers.end());
  }
  OperadTerm head = OperadTerm::sum(ops.size());
  out.op = op_compose(head, std::move(ops));
  return out;
}

// One bottom-up pass of zero elimination and summand merging.
template <class T>
GradMod<T> tidy_term(const OperadTerm& t, std::span<const T> in, SemiringId sr) {
  using K = OperadTerm::Kind;
  auto whole = [&] { return GradMod<T>{t, std::vector<T>(in.begin(), in.end())}; };
  switch (t.kind()) {
    case K::Id:
    case K::Prim:
      return whole();
    case K::ScaleLeft:
    case K::ScaleRight:
      if (t.scalar().is_zero()) return {OperadTerm::sum(0), {}};
      return whole();
    case K::Sum: {
      std::vector<GradMod<T>> parts;
      for (const T& x : in) parts.push_back({OperadTerm::id(), {x}});
      return merge_summands(std::move(parts), sr);
    }
    case K::Prod: {
      const OperadTerm& l = t.children()[0];
      const OperadTerm& r = t.children()[1];
      auto a = tidy_term(l, in.subspan(0, l.arity()), sr);
      auto b = tidy_term(r, in.subspan(l.arity()), sr);
      if (is_sum0(a.op) || is_sum0(b.op)) return {OperadTerm::sum(0), {}};
      GradMod<T> out{op_normalize(OperadTerm::prod(a.op, b.op)), std::move(a.carriers)};
      out.carriers.insert(out.carriers.end(), b.carriers.begin(), b.carriers.end());
      return out;
    }
    case K::Comp:
      break;
  }
  const OperadTerm& head = t.head();
  if (is_zero_scale(head)) return {OperadTerm::sum(0), {}};
  std::vector<GradMod<T>> parts;
  std::size_t pos = 0;
  for (const auto& c : t.children()) {
    parts.push_back(tidy_term(c, in.subspan(pos, c.arity()), sr));
    pos += c.arity();
  }
  if (head.is(K::Sum)) return merge_summands(std::move(parts), sr);
  if ((head.is(K::ScaleLeft) || head.is(K::ScaleRight)) && is_sum0(parts[0].op)) {
    return {OperadTerm::sum(0), {}};
  }
  std::vector<OperadTerm> ops;
  GradMod<T> out{OperadTerm::id(), {}};
  for (auto& p : parts) {
    ops.push_back(p.op);
    out.carriers.insert(out.carriers.end(), p.carriers.begin(), p.carriers.end());
  }
  out.op = op_compose(head, std::move(ops));
  return out;
}

}  // namespace detail

// Canonical form: slots canonicalized, flattened into the operad, zero
// scalars and their slots eliminated, equal summands merged, repeated to a
// fixpoint. Every remaining slot is a singleton {s ↦ 1}.
template <class T>
Graded<T> tidy(const Graded<T>& g) {
  Graded<T> clean{g.sr, g.op, {}};
  for (const auto& s : g.slots) clean.slots.push_back(canonical(s));
  GradMod<T> m = alpha(clean);
  m.op = op_normalize(m.op);
  for (;;) {
    GradMod<T> next = detail::tidy_term(m.op, std::span<const T>(m.carriers), g.sr);
    next.op = op_normalize(next.op);
    bool same = next.op == m.op && next.carriers == m.carriers;
    m = std::move(next);
    if (same) break;
  }
  Graded<T> out{g.sr, m.op, {}};
  for (auto& x : m.carriers) out.slots.push_back(LinComb<T>::single(g.sr, std::move(x), Weight::one(g.sr)));
  return out;
}

template <class T>
Graded<T> graded_pure(SemiringId sr, T x) {
  return tidy(Graded<T>{sr, OperadTerm::id(), {LinComb<T>::single(sr, std::move(x), Weight::one(sr))}});
}

template <class T, class F>
auto graded_bind(const Graded<T>& g, F&& f) -> std::invoke_result_t<F&, const T&> {
  using R = std::invoke_result_t<F&, const T&>;
  GradMod<T> m = alpha(g);
  std::vector<OperadTerm> ops;
  R out{g.sr, OperadTerm::id(), {}};
  for (const T& x : m.carriers) {
    R r = f(x);
    if (r.sr != g.sr) throw SemiringMismatch("graded bind");
    ops.push_back(r.op);
    out.slots.insert(out.slots.end(), r.slots.begin(), r.slots.end());
  }
  out.op = op_compose(m.op, std::move(ops));
  return tidy(out);
}

template <class T, class F>
auto graded_fmap(const Graded<T>& g, F&& f) -> Graded<std::invoke_result_t<F&, const T&>> {
  using U = std::invoke_result_t<F&, const T&>;
  Graded<U> out{g.sr, g.op, {}};
  for (const auto& slot : g.slots) {
    LinComb<U> l(g.sr);
    for (const auto& [x, k] : slot) l.add(f(x), k);
    out.slots.push_back(std::move(l));
  }
  return tidy(out);
}

}  // namespace monader
