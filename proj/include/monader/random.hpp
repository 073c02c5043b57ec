#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "monader/expr.hpp"
#include "monader/functions.hpp"

namespace monader {

struct GenOptions {
  SemiringId semiring = SemiringId::Boolean;
  std::vector<Symbol> alphabet{'a', 'b'};
  std::size_t max_size = 8;  // node count
  bool plain = false;        // symbols, ε, ∅, +, ·, * only
};

// Seeded generator of proper expressions. Draws are rng() % n so sequences
// are identical across standard libraries.
class RandomExprGen {
 public:
  RandomExprGen(std::uint64_t seed, GenOptions opts);

  Expr next();
  Weight weight();
  std::size_t below(std::size_t n);
  Symbol symbol();
  const FnRef& function();

  const GenOptions& options() const { return opts_; }

 private:
  Expr gen(std::size_t budget);
  Expr leaf();

  std::mt19937_64 rng_;
  GenOptions opts_;
  std::vector<FnRef> fns_;
};

}  // namespace monader
