#include "monader/random.hpp"

namespace monader {

RandomExprGen::RandomExprGen(std::uint64_t seed, GenOptions opts) : rng_(seed), opts_(std::move(opts)) {
  for (const auto& f : FnRegistry::builtins(opts_.semiring).all()) {
    if (f.arity() + 1 <= opts_.max_size) fns_.push_back(f);
  }
}

std::size_t RandomExprGen::below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

Symbol RandomExprGen::symbol() { return opts_.alphabet[below(opts_.alphabet.size())]; }

const FnRef& RandomExprGen::function() { return fns_[below(fns_.size())]; }

Weight RandomExprGen::weight() {
  switch (opts_.semiring) {
    case SemiringId::Boolean: return Weight::boolean(below(4) != 0);
    case SemiringId::Nat: return Weight::from_int(SemiringId::Nat, static_cast<long long>(below(4)));
    case SemiringId::Int: return Weight::from_int(SemiringId::Int, static_cast<long long>(below(6)) - 2);
    case SemiringId::Rat: {
      static const Rational pool[] = {Rational(-1), Rational(1, 2), Rational(2), Rational(3, 2), Rational(0),
                                      Rational(1), Rational(-2, 3)};
      return Weight::rational(pool[below(std::size(pool))]);
    }
  }
  return Weight::one(opts_.semiring);
}

Expr RandomExprGen::leaf() {
  std::size_t r = below(20);
  if (r < 16) return Expr::sym(symbol(), opts_.semiring);
  if (r < 19) return Expr::epsilon(opts_.semiring);
  return Expr::empty(opts_.semiring);
}

Expr RandomExprGen::gen(std::size_t budget) {
  if (budget <= 1) return leaf();
  // The whole budget is spent, so sizes follow the draw in next().
  // 1 sum, 2 cat, 3 star, 4 left action, 5 right action, 6 function
  static const std::size_t plain_pool[] = {1, 1, 2, 2, 3};
  static const std::size_t full_pool[] = {1, 1, 2, 2, 3, 4, 5, 6, 6};
  std::size_t choice = opts_.plain ? plain_pool[below(std::size(plain_pool))] : full_pool[below(std::size(full_pool))];
  auto split = [&] { return 1 + below(budget - 2); };
  switch (choice) {
    case 1:
      if (budget >= 3) {
        std::size_t l = split();
        Expr left = gen(l);
        return Expr::sum(std::move(left), gen(budget - 1 - l));
      }
      return Expr::star(gen(budget - 1));
    case 2:
      if (budget >= 3) {
        std::size_t l = split();
        Expr left = gen(l);
        return Expr::cat(std::move(left), gen(budget - 1 - l));
      }
      return Expr::star(gen(budget - 1));
    case 3:
      return Expr::star(gen(budget - 1));
    case 4: {
      Weight k = weight();
      return Expr::lact(std::move(k), gen(budget - 1));
    }
    case 5: {
      Expr e = gen(budget - 1);
      return Expr::ract(std::move(e), weight());
    }
    default: {
      if (fns_.empty()) return Expr::star(gen(budget - 1));
      const FnRef& f = function();
      if (f.arity() + 1 > budget) return Expr::star(gen(budget - 1));
      std::vector<Expr> args;
      std::size_t left = budget - 1;
      for (std::size_t i = 0; i < f.arity(); ++i) {
        std::size_t remaining = f.arity() - i - 1;
        std::size_t share = (i + 1 == f.arity()) ? left : 1 + below(left - remaining);
        args.push_back(gen(share));
        left -= share;
      }
      return Expr::apply(f, std::move(args));
    }
  }
}

Expr RandomExprGen::next() {
  for (;;) {
    Expr e = gen(1 + below(opts_.max_size));
    if (e.is_proper() && e.size() <= opts_.max_size) return e;
  }
}

}  // namespace monader
