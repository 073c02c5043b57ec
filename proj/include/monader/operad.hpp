#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monader/functions.hpp"
#include "monader/weight.hpp"

namespace monader {

// A symbolic element of the operad of n-ary functions over a weight
// semiring. Terms are immutable and cheap to copy.
//
//   Id                 x -> x                                   arity 1
//   Prim(f)            registered function f                    arity(f)
//   Sum(n)             (x1..xn) -> x1 + ... + xn                arity n; Sum(0) is the constant 0
//   ScaleLeft(k)       x -> k x                                 arity 1
//   ScaleRight(k)      x -> x k                                 arity 1
//   Prod(o, o')        (x1..x_{n+n'}) -> o(x1..xn) * o'(rest)   arity n + n'
//   Comp(o, [o1..ok])  o(o1(..), .., ok(..))                    sum of arity(oi)
class OperadTerm {
 public:
  enum class Kind { Id, Prim, Sum, ScaleLeft, ScaleRight, Prod, Comp };

  static OperadTerm id();
  static OperadTerm prim(FnRef f);
  static OperadTerm sum(std::size_t n);
  static OperadTerm scale_left(Weight k);
  static OperadTerm scale_right(Weight k);
  static OperadTerm prod(OperadTerm left, OperadTerm right);
  // Unnormalized composition node. Throws ArityMismatch when
  // children.size() != head.arity().
  static OperadTerm comp(OperadTerm head, std::vector<OperadTerm> children);

  Kind kind() const;
  std::size_t arity() const;

  bool is(Kind k) const { return kind() == k; }
  bool is_leaf() const { return kind() != Kind::Prod && kind() != Kind::Comp; }

  const FnRef& fn() const;                           // Prim
  std::size_t sum_arity() const;                     // Sum
  const Weight& scalar() const;                      // ScaleLeft / ScaleRight
  const OperadTerm& head() const;                    // Comp
  const std::vector<OperadTerm>& children() const;   // Comp: arguments; Prod: {left, right}

  friend bool operator==(const OperadTerm& a, const OperadTerm& b);

 private:
  struct Node;
  explicit OperadTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

std::size_t op_arity(const OperadTerm& o);

// Evaluation-equivalent canonical form. Compositions are pushed down to
// primitive heads, Id and unit scalars vanish, nested scalars fuse, nested
// sums flatten and Sum(0) summands drop out. Argument order is preserved.
OperadTerm op_normalize(const OperadTerm& o);

// o ∘ (c1..ck), normalized. Throws ArityMismatch.
OperadTerm op_compose(const OperadTerm& o, std::vector<OperadTerm> children);

// o ∘_j p with 1-based j. Throws IndexOutOfRange.
OperadTerm op_compose_at(const OperadTerm& o, std::size_t j, const OperadTerm& p);

// `sr` types the result when o has arity 0. Throws ArityMismatch or
// SemiringMismatch.
Weight op_eval(const OperadTerm& o, std::span<const Weight> args, SemiringId sr);

// ASCII prefix form, e.g. "ExtDist o (Sum2, Id, Sum2 o (Id, L[2]))".
std::string to_string(const OperadTerm& o);

// Inverse of to_string. Function names resolve through `registry`; scalar
// literals use its semiring. Throws SyntaxError / UnknownFunction.
OperadTerm parse_operad(std::string_view text, const FnRegistry& registry);

}  // namespace monader
