#pragma once

#include <optional>

#include "monader/error.hpp"
#include "monader/expr.hpp"
#include "monader/supports.hpp"

namespace monader {

struct Properness {
  bool proper;
  std::optional<Weight> value;  // Null(e) when proper
};

Properness properness(const Expr& e);
std::optional<Weight> part_null(const Expr& e);
// Throws ImproperExpression.
Weight null(const Expr& e);

// Throws ImproperExpression, SemiringMismatch (expression and support over
// different semirings) or SupportMismatch.
void require_admissible(const SupportId& id, const Expr& e);

// d_a(e) for a normalized proper e; the caller validates.
template <class S>
typename S::template M<Expr> derive(const S& s, const Expr& e, Symbol a) {
  switch (e.kind()) {
    case ExprKind::Sym:
      return e.symbol() == a ? s.pure(Expr::epsilon(e.semiring())) : s.zero();
    case ExprKind::Epsilon:
    case ExprKind::Empty:
      return s.zero();
    case ExprKind::Sum:
      return s.plus(derive(s, e.left(), a), derive(s, e.right(), a));
    case ExprKind::Cat: {
      auto head = s.rtimes(derive(s, e.left(), a), e.right());
      const Weight& n = *e.left().part_null();
      if (n.is_zero()) return head;
      return s.plus(head, s.lact(n, derive(s, e.right(), a)));
    }
    case ExprKind::Star:
      return s.rtimes(derive(s, e.child(), a), e);
    case ExprKind::LAct:
      return s.lact(e.weight(), derive(s, e.child(), a));
    case ExprKind::RAct:
      return s.ract(derive(s, e.child(), a), e.weight());
    case ExprKind::Apply: {
      std::vector<typename S::template M<Expr>> ds;
      for (const auto& c : e.children()) ds.push_back(derive(s, c, a));
      return s.fapply(e.fn(), ds);
    }
  }
  return s.zero();
}

// Derivative of a carrier met along a word, checked for properness.
template <class S>
typename S::template M<Expr> derive_carrier(const S& s, const Expr& c, Symbol a) {
  if (!c.is_proper()) throw ImproperExpression("derivated term " + pretty(c) + " is not proper");
  return derive(s, c, a);
}

template <class S>
typename S::template M<Expr> derive_word_with(const S& s, const Expr& e, const Word& w) {
  auto v = s.pure(normalize(e));
  for (Symbol a : w) {
    v = s.bind(v, [&](const Expr& c) { return derive_carrier(s, c, a); });
  }
  return v;
}

// weight_w(e) = d_w(e) >>= Null.
template <class S>
Weight weight_with(const S& s, const Expr& e, const Word& w) {
  auto d = derive_word_with(s, e, w);
  return s.weight_value(s.bind(d, [&](const Expr& c) { return s.embed(null(c)); }));
}

SupportValue derive_symbol(const SupportId& id, const Expr& e, Symbol a);
SupportValue derive_word(const SupportId& id, const Expr& e, const Word& w);
Weight weight(const SupportId& id, const Expr& e, const Word& w);

}  // namespace monader
