#include "monader/automaton.hpp"

#include <set>

#include "monader/derivation.hpp"

namespace monader {

namespace {

template <class S>
DerivAutomaton build_with(const S& s, const SupportId& id, const Expr& e, std::size_t max_states,
                          const Alphabet& alphabet) {
  DerivAutomaton A;
  A.support = id;
  A.alphabet = alphabet;
  std::map<Expr, StateId> index;
  auto intern = [&](const Expr& c) {
    auto [it, fresh] = index.emplace(c, A.states.size());
    if (fresh) {
      A.states.push_back(c);
      A.finals.push_back(null(c));
    }
    return it->second;
  };

  A.initial = s.fmap(s.pure(normalize(e)), intern);
  for (StateId q = 0; q < A.states.size(); ++q) {
    for (Symbol a : alphabet.symbols()) {
      auto d = derive_carrier(s, A.states[q], a);
      std::set<Expr> fresh;
      for (const auto& c : s.carriers(d)) {
        if (!index.count(c)) fresh.insert(c);
      }
      if (A.states.size() + fresh.size() > max_states) {
        A.truncated = true;
        for (StateId r = q; r < A.states.size(); ++r) A.frontier.push_back(r);
        return A;
      }
      A.transitions.emplace(std::make_pair(q, a), s.fmap(d, intern));
    }
  }
  return A;
}

template <class S>
Weight run_with(const S& s, const DerivAutomaton& A, const Word& w) {
  using V = typename S::template M<StateId>;
  V v = value_as<S>(A.initial);
  for (Symbol a : w) {
    if (!A.alphabet.contains(a)) {
      throw TruncatedAutomaton(std::string("symbol '") + a + "' is outside the automaton alphabet");
    }
    v = s.bind(v, [&](StateId q) -> V {
      auto it = A.transitions.find({q, a});
      if (it == A.transitions.end()) {
        throw TruncatedAutomaton("no transition from state " + std::to_string(q) + " on '" + a +
                                 "' (automaton was truncated)");
      }
      return value_as<S>(it->second);
    });
  }
  return s.weight_value(s.bind(v, [&](StateId q) { return s.embed(A.finals.at(q)); }));
}

}  // namespace

DerivAutomaton build(const SupportId& id, const Expr& e, std::size_t max_states,
                     const std::optional<Alphabet>& alphabet) {
  require_admissible(id, e);
  if (max_states == 0) throw IndexOutOfRange("state budget must be at least 1");
  Alphabet sigma = alphabet ? *alphabet : Alphabet::infer(e);
  return with_support(id, [&](const auto& s) { return build_with(s, id, e, max_states, sigma); });
}

Weight run(const DerivAutomaton& a, const Word& w) {
  return with_support(a.support, [&](const auto& s) { return run_with(s, a, w); });
}

}  // namespace monader
