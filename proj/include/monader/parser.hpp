#pragma once

#include <string_view>

#include "monader/expr.hpp"
#include "monader/functions.hpp"

namespace monader {

// Grammar (whitespace is ignored):
//
//   expr      := term ("+" term)*
//   term      := factor ("." factor)*
//   factor    := prefixAct? atom "*"* postfixAct?
//   atom      := SYMBOL | "eps" | "nil" | FNNAME "(" expr ("," expr)* ")" | "(" expr ")"
//   prefixAct := "{" WEIGHT "}"
//   postfixAct:= "{" WEIGHT "}"
//
// SYMBOL is one lowercase letter; longer lowercase words are reserved.
// FNNAME is an uppercase identifier resolved through `registry`. + and . are
// right-associative. A factor with both actions reads {k}(atom{k'}).
//
// Throws SyntaxError, UnknownFunction, ArityMismatch, BadWeightLiteral,
// SemiringMismatch (registry over a different semiring).
Expr parse(std::string_view text, SemiringId semiring, const FnRegistry& registry);

}  // namespace monader
