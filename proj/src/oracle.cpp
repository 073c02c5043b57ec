#include "monader/oracle.hpp"

#include <string_view>

#include "monader/error.hpp"

namespace monader {

namespace {

Weight series(const Expr& e, std::string_view w);

// Sum over every cut of w into nonempty factors u1..un of Π S(e)(ui).
Weight star_series(const Expr& e, std::string_view w) {
  SemiringId sr = e.semiring();
  if (w.empty()) return Weight::one(sr);
  Weight total = Weight::zero(sr);
  const std::size_t cuts = w.size() - 1;
  for (unsigned long mask = 0; mask < (1UL << cuts); ++mask) {
    Weight prod = Weight::one(sr);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= cuts && !prod.is_zero(); ++i) {
      if (i == cuts || (mask >> i) & 1UL) {
        prod = sr_mul(prod, series(e, w.substr(start, i + 1 - start)));
        start = i + 1;
      }
    }
    total = sr_add(total, prod);
  }
  return total;
}

Weight series(const Expr& e, std::string_view w) {
  SemiringId sr = e.semiring();
  switch (e.kind()) {
    case ExprKind::Sym:
      return (w.size() == 1 && w[0] == e.symbol()) ? Weight::one(sr) : Weight::zero(sr);
    case ExprKind::Epsilon:
      return w.empty() ? Weight::one(sr) : Weight::zero(sr);
    case ExprKind::Empty:
      return Weight::zero(sr);
    case ExprKind::Sum:
      return sr_add(series(e.left(), w), series(e.right(), w));
    case ExprKind::Cat: {
      Weight total = Weight::zero(sr);
      for (std::size_t i = 0; i <= w.size(); ++i) {
        Weight l = series(e.left(), w.substr(0, i));
        if (l.is_zero()) continue;
        total = sr_add(total, sr_mul(l, series(e.right(), w.substr(i))));
      }
      return total;
    }
    case ExprKind::Star:
      return star_series(e.child(), w);
    case ExprKind::LAct:
      return sr_mul(e.weight(), series(e.child(), w));
    case ExprKind::RAct:
      return sr_mul(series(e.child(), w), e.weight());
    case ExprKind::Apply: {
      std::vector<Weight> args;
      for (const auto& c : e.children()) args.push_back(series(c, w));
      return e.fn()(args);
    }
  }
  return Weight::zero(sr);
}

}  // namespace

Weight oracle_weight(const Expr& e, const Word& w, const OracleOptions& opts) {
  if (!e.is_proper()) throw ImproperExpression(pretty(e) + " is not proper");
  if (w.size() > opts.max_word_len) {
    throw WordTooLong("word of length " + std::to_string(w.size()) + " exceeds the oracle bound " +
                      std::to_string(opts.max_word_len));
  }
  return series(e, w);
}

std::map<Word, Weight> enumerate_weights(const Expr& e, std::size_t max_len, const Alphabet& alphabet,
                                         const OracleOptions& opts) {
  std::map<Word, Weight> out;
  for (const auto& w : alphabet.words_up_to(max_len)) out.emplace(w, oracle_weight(e, w, opts));
  return out;
}

std::map<Word, Weight> enumerate_weights(const Expr& e, std::size_t max_len, const OracleOptions& opts) {
  return enumerate_weights(e, max_len, Alphabet::infer(e), opts);
}

}  // namespace monader
