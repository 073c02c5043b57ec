#include "monader/derivation.hpp"

namespace monader {

Properness properness(const Expr& e) { return {e.is_proper(), e.part_null()}; }

std::optional<Weight> part_null(const Expr& e) { return e.part_null(); }

Weight null(const Expr& e) {
  if (!e.is_proper()) throw ImproperExpression(pretty(e) + " is not proper");
  return *e.part_null();
}

void require_admissible(const SupportId& id, const Expr& e) {
  validate(id);
  if (e.semiring() != id.semiring) {
    throw SemiringMismatch("expression is over " + std::string(semiring_name(e.semiring())) +
                           ", support is " + to_string(id));
  }
  if (!e.is_proper()) throw ImproperExpression(pretty(e) + " is not proper");
}

SupportValue derive_symbol(const SupportId& id, const Expr& e, Symbol a) {
  require_admissible(id, e);
  return with_support(id, [&](const auto& s) -> SupportValue { return derive(s, normalize(e), a); });
}

SupportValue derive_word(const SupportId& id, const Expr& e, const Word& w) {
  require_admissible(id, e);
  return with_support(id, [&](const auto& s) -> SupportValue { return derive_word_with(s, e, w); });
}

Weight weight(const SupportId& id, const Expr& e, const Word& w) {
  require_admissible(id, e);
  return with_support(id, [&](const auto& s) { return weight_with(s, e, w); });
}

}  // namespace monader
