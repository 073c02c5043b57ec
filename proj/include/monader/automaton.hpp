#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monader/expr.hpp"
#include "monader/supports.hpp"

namespace monader {

using StateId = std::size_t;
using StateValue = ValueOf<StateId>;

// Kleisli automaton of derivatives: i = pure(e), δ(a) = d_a, f = Null.
// States are the distinct carriers met while exploring.
struct DerivAutomaton {
  SupportId support{SupportKind::Set, SemiringId::Boolean};
  Alphabet alphabet{{'a'}};
  std::vector<Expr> states;
  StateValue initial;
  // An empty value encodes the sink; it is stored but never drawn.
  std::map<std::pair<StateId, Symbol>, StateValue> transitions;
  std::vector<Weight> finals;
  bool truncated = false;
  std::vector<StateId> frontier;  // unexpanded states when truncated
};

// Breadth-first closure from pure(e): FIFO across states, alphabet order
// within a state. Stops with truncated = true as soon as a transition would
// create state number max_states + 1. The alphabet defaults to the symbols of
// e. Throws ImproperExpression, SemiringMismatch, SupportMismatch.
DerivAutomaton build(const SupportId& id, const Expr& e, std::size_t max_states,
                     const std::optional<Alphabet>& alphabet = std::nullopt);

// f ⋄ δ(w) ⋄ i. Throws TruncatedAutomaton when the run needs an unexplored
// transition.
Weight run(const DerivAutomaton& a, const Word& w);

// Graphviz text. Final weights double the periphery and appear as xlabels;
// gradcomb transitions pass through a dashed box holding the operad term.
std::string export_dot(const DerivAutomaton& a);

// {support, semiring, alphabet, states:[{id,label,final}], initial,
//  transitions:[{from,symbol,target}], truncated, frontier}
// with support-shaped targets:
//   maybe    id | null
//   set      [id, ...]
//   lincomb  [[coeff, id], ...]
//   gradcomb {op, slots: [[[coeff, id], ...], ...]}
// Weights are strings in canonical text.
std::string export_json(const DerivAutomaton& a, int indent = 2);

// Inverse of export_json. Throws SyntaxError on malformed documents.
DerivAutomaton import_json(const std::string& text);

}  // namespace monader
