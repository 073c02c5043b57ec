#pragma once

#include <cstddef>
#include <map>

#include "monader/expr.hpp"

namespace monader {

// Brute-force series semantics S(e)(w), written without derivatives so it can
// serve as ground truth. Exponential in |w|.
struct OracleOptions {
  std::size_t max_word_len = 10;
};

// Throws ImproperExpression, WordTooLong.
Weight oracle_weight(const Expr& e, const Word& w, const OracleOptions& opts = {});

// Every word up to max_len over `alphabet`.
std::map<Word, Weight> enumerate_weights(const Expr& e, std::size_t max_len, const Alphabet& alphabet,
                                         const OracleOptions& opts = {});
// Same, over the symbols occurring in e.
std::map<Word, Weight> enumerate_weights(const Expr& e, std::size_t max_len, const OracleOptions& opts = {});

}  // namespace monader
