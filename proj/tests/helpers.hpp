#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monader/derivation.hpp"
#include "monader/oracle.hpp"
#include "monader/parser.hpp"
#include "monader/random.hpp"
#include "monader/supports.hpp"

namespace testing_helpers {

using namespace monader;

inline Expr ex(const std::string& text, SemiringId sr = SemiringId::Boolean) {
  return parse(text, sr, FnRegistry::builtins(sr));
}

inline const char* kExtDistE = "ExtDist(a*.b*+b*.a*,b*.a*.b*,a*.b*.a*)";

inline Expr ext_dist_e() { return ex(kExtDistE, SemiringId::Nat); }

inline const std::vector<Word>& words4() {
  static const std::vector<Word> w = Alphabet({'a', 'b'}).words_up_to(4);
  return w;
}

// Series equality checked by the oracle on every word up to length 4.
inline bool same_series(const Expr& x, const Expr& y, const std::vector<Word>& words = words4()) {
  for (const auto& w : words) {
    if (!(oracle_weight(x, w) == oracle_weight(y, w))) return false;
  }
  return true;
}

// Random monadic values of a support, built directly from the representation
// rather than through support operations.
class ValueGen {
 public:
  ValueGen(std::uint64_t seed, SemiringId sr) : g_(seed, opts(sr)), sr_(sr) {}

  RandomExprGen& exprs() { return g_; }
  Weight weight() { return g_.weight(); }
  Expr expr() { return g_.next(); }

  // An expression that survives as a carrier: its normal form is not nil.
  Expr carrier() {
    for (;;) {
      Expr e = g_.next();
      if (!normalize(e).is(ExprKind::Empty)) return e;
    }
  }

  Maybe<Expr> maybe() {
    if (g_.below(4) == 0) return std::nullopt;
    return MaybeSupport{}.pure(expr());
  }

  std::set<Expr> set() {
    std::set<Expr> out;
    std::size_t n = g_.below(4);
    for (std::size_t i = 0; i < n; ++i) {
      auto one = SetSupport{}.pure(expr());
      out.insert(one.begin(), one.end());
    }
    return out;
  }

  LinComb<Expr> lincomb() {
    LinComb<Expr> out(sr_);
    std::size_t n = g_.below(4);
    for (std::size_t i = 0; i < n; ++i) out.add(expr(), weight());
    return canonical(out);
  }

  OperadTerm op(std::size_t depth) {
    std::size_t r = g_.below(depth == 0 ? 3 : 7);
    switch (r) {
      case 0: return OperadTerm::id();
      case 1: return OperadTerm::sum(g_.below(3));
      case 2: return OperadTerm::scale_left(weight());
      case 3: return OperadTerm::scale_right(weight());
      case 4: {
        OperadTerm l = op(depth - 1);
        return OperadTerm::prod(l, op(depth - 1));
      }
      default: {
        FnRef f = g_.function();
        std::vector<OperadTerm> kids;
        for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(op(depth - 1));
        return OperadTerm::comp(OperadTerm::prim(f), std::move(kids));
      }
    }
  }

  Graded<Expr> graded() {
    Graded<Expr> g{sr_, op(2), {}};
    for (std::size_t i = 0; i < g.op.arity(); ++i) {
      LinComb<Expr> l(sr_);
      std::size_t n = g_.below(3);
      for (std::size_t j = 0; j < n; ++j) l.add(expr(), weight());
      g.slots.push_back(l);
    }
    return tidy(g);
  }

  template <class S>
  typename S::template M<Expr> value(const S&) {
    if constexpr (std::is_same_v<S, MaybeSupport>) return maybe();
    else if constexpr (std::is_same_v<S, SetSupport>) return set();
    else if constexpr (std::is_same_v<S, LinCombSupport>) return lincomb();
    else return graded();
  }

 private:
  static GenOptions opts(SemiringId sr) {
    GenOptions o;
    o.semiring = sr;
    o.max_size = 5;
    return o;
  }

  RandomExprGen g_;
  SemiringId sr_;
};

// Semantic equality of two monadic values: equal series of toExp.
template <class S>
bool same_value(const S& s, const typename S::template M<Expr>& x, const typename S::template M<Expr>& y) {
  return same_series(s.to_exp(x), s.to_exp(y));
}

// Kleisli arrows Expr -> M(Expr) used by the monad-law tests.
template <class S>
std::vector<std::function<typename S::template M<Expr>(const Expr&)>> arrow_pool(const S& s) {
  using M = typename S::template M<Expr>;
  SemiringId sr = s.semiring();
  Expr b = Expr::sym('b', sr);
  Expr two_or_true = Expr::lact(sr == SemiringId::Boolean ? Weight::boolean(true) : Weight::from_int(sr, 2),
                                Expr::sym('a', sr));
  return {
      [s](const Expr& e) -> M { return derive_carrier(s, e, 'a'); },
      [s](const Expr& e) -> M { return derive_carrier(s, e, 'b'); },
      [s, b](const Expr& e) -> M { return s.plus(s.pure(e), s.pure(b)); },
      [s, two_or_true](const Expr& e) -> M { return s.rtimes(s.pure(two_or_true), e); },
      [s](const Expr& e) -> M {
        FnRef f = FnRegistry::builtins(s.semiring()).lookup("Mul");
        return s.fapply(f, {s.pure(e), derive_carrier(s, e, 'a')});
      },
  };
}

// Equations linking the support operations to expressions, checked through
// the oracle on every word up to length 4. Returns the number of failures
// over `n` random cases; each case checks all six equations.
template <class S>
int support_equation_failures(const S& s, std::uint64_t seed, int n) {
  ValueGen g(seed, s.semiring());
  int failures = 0;
  for (int i = 0; i < n; ++i) {
    auto v = g.value(s);
    auto v2 = g.value(s);
    Expr tv = s.to_exp(v);
    bool ok = true;

    for (const auto& w : words4()) {
      auto lifted = s.bind(v, [&](const Expr& c) { return s.embed(oracle_weight(c, w)); });
      if (!(oracle_weight(tv, w) == s.weight_value(lifted))) ok = false;
    }

    Expr f = g.expr();
    ok = ok && same_series(s.to_exp(s.rtimes(v, f)), Expr::cat(tv, f));
    ok = ok && same_series(s.to_exp(s.plus(v, v2)), Expr::sum(tv, s.to_exp(v2)));
    Weight k = g.weight();
    ok = ok && same_series(s.to_exp(s.lact(k, v)), Expr::lact(k, tv));
    ok = ok && same_series(s.to_exp(s.ract(v, k)), Expr::ract(tv, k));

    FnRef fn = g.exprs().function();
    std::vector<typename S::template M<Expr>> args{v, v2};
    while (args.size() < fn.arity()) args.push_back(g.value(s));
    while (args.size() > fn.arity()) args.pop_back();
    std::vector<Expr> exps;
    for (const auto& a : args) exps.push_back(s.to_exp(a));
    ok = ok && same_series(s.to_exp(s.fapply(fn, args)), Expr::apply(fn, exps));

    failures += !ok;
  }
  return failures;
}

}  // namespace testing_helpers
