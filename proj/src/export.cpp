#include <sstream>

#include "monader/automaton.hpp"
#include "monader/error.hpp"
#include "monader/json_io.hpp"
#include "monader/parser.hpp"

namespace monader {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SyntaxError(0, "malformed json: " + what); }

template <class T, class Enc>
Json encode_linear(const LinComb<T>& l, Enc&& enc) {
  Json out = Json::array();
  for (const auto& [x, k] : l) out.push_back(Json::array({k.to_string(), enc(x)}));
  return out;
}

template <class T, class Enc>
Json encode(const ValueOf<T>& v, Enc&& enc) {
  return std::visit(
      [&](const auto& m) -> Json {
        using V = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<V, Maybe<T>>) {
          return m ? enc(*m) : Json(nullptr);
        } else if constexpr (std::is_same_v<V, std::set<T>>) {
          Json out = Json::array();
          for (const auto& x : m) out.push_back(enc(x));
          return out;
        } else if constexpr (std::is_same_v<V, LinComb<T>>) {
          return encode_linear(m, enc);
        } else {
          Json slots = Json::array();
          for (const auto& s : m.slots) slots.push_back(encode_linear(s, enc));
          return Json{{"op", to_string(m.op)}, {"slots", slots}};
        }
      },
      v);
}

template <class T, class Dec>
LinComb<T> decode_linear(const Json& j, SemiringId sr, Dec&& dec) {
  if (!j.is_array()) bad("linear combination must be an array");
  LinComb<T> out(sr);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string()) bad("expected [coeff, carrier]");
    out.add(dec(term[1]), Weight::parse(sr, term[0].get<std::string>()));
  }
  return out;
}

template <class T, class Dec>
ValueOf<T> decode(const Json& j, const SupportId& id, Dec&& dec) {
  switch (id.kind) {
    case SupportKind::Maybe:
      if (j.is_null()) return Maybe<T>{};
      return Maybe<T>{dec(j)};
    case SupportKind::Set: {
      if (!j.is_array()) bad("set value must be an array");
      std::set<T> out;
      for (const auto& x : j) out.insert(dec(x));
      return out;
    }
    case SupportKind::LinComb:
      return decode_linear<T>(j, id.semiring, dec);
    case SupportKind::GradComb: {
      if (!j.is_object() || !j.contains("op") || !j.contains("slots")) bad("graded value needs op and slots");
      FnRegistry reg = FnRegistry::builtins(id.semiring);
      Graded<T> out{id.semiring, parse_operad(j.at("op").get<std::string>(), reg), {}};
      for (const auto& s : j.at("slots")) out.slots.push_back(decode_linear<T>(s, id.semiring, dec));
      if (out.slots.size() != out.op.arity()) bad("slot count differs from operad arity");
      return out;
    }
  }
  bad("unknown support");
}

StateId decode_state(const Json& j) {
  if (!j.is_number_unsigned()) bad("state id must be a non-negative integer");
  return j.get<StateId>();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json to_json(const SupportValue& v) {
  return encode<Expr>(v, [](const Expr& e) { return Json(pretty(e)); });
}

Json to_json(const StateValue& v) {
  return encode<StateId>(v, [](StateId q) { return Json(q); });
}

StateValue state_value_from_json(const Json& j, const SupportId& id) { return decode<StateId>(j, id, decode_state); }

SupportValue support_value_from_json(const Json& j, const SupportId& id) {
  FnRegistry reg = FnRegistry::builtins(id.semiring);
  return decode<Expr>(j, id, [&](const Json& x) {
    if (!x.is_string()) bad("expression must be a string");
    return normalize(parse(x.get<std::string>(), id.semiring, reg));
  });
}

Json to_json(const DerivAutomaton& a) {
  Json j;
  j["support"] = std::string(support_name(a.support.kind));
  j["semiring"] = std::string(semiring_name(a.support.semiring));
  j["alphabet"] = a.alphabet.to_string();
  Json states = Json::array();
  for (StateId q = 0; q < a.states.size(); ++q) {
    states.push_back({{"id", q}, {"label", pretty(a.states[q])}, {"final", a.finals[q].to_string()}});
  }
  j["states"] = states;
  j["initial"] = to_json(a.initial);
  Json trans = Json::array();
  for (const auto& [key, v] : a.transitions) {
    trans.push_back({{"from", key.first}, {"symbol", std::string(1, key.second)}, {"target", to_json(v)}});
  }
  j["transitions"] = trans;
  j["truncated"] = a.truncated;
  j["frontier"] = a.frontier;
  return j;
}

DerivAutomaton automaton_from_json(const Json& j) {
  try {
    DerivAutomaton a;
    auto kind = support_from_name(j.at("support").get<std::string>());
    auto sr = semiring_from_name(j.at("semiring").get<std::string>());
    if (!kind || !sr) bad("unknown support or semiring");
    a.support = {*kind, *sr};
    validate(a.support);
    std::string sigma = j.at("alphabet").get<std::string>();
    a.alphabet = Alphabet(std::set<Symbol>(sigma.begin(), sigma.end()));
    FnRegistry reg = FnRegistry::builtins(*sr);
    for (const auto& st : j.at("states")) {
      if (st.at("id").get<StateId>() != a.states.size()) bad("state ids must be 0..n-1 in order");
      a.states.push_back(normalize(parse(st.at("label").get<std::string>(), *sr, reg)));
      a.finals.push_back(Weight::parse(*sr, st.at("final").get<std::string>()));
    }
    a.initial = state_value_from_json(j.at("initial"), a.support);
    for (const auto& t : j.at("transitions")) {
      std::string sym = t.at("symbol").get<std::string>();
      if (sym.size() != 1) bad("symbol must be one character");
      a.transitions.emplace(std::make_pair(t.at("from").get<StateId>(), sym[0]),
                            state_value_from_json(t.at("target"), a.support));
    }
    a.truncated = j.at("truncated").get<bool>();
    a.frontier = j.at("frontier").get<std::vector<StateId>>();
    return a;
  } catch (const nlohmann::json::exception& ex) {
    bad(ex.what());
  }
}

std::string export_json(const DerivAutomaton& a, int indent) { return to_json(a).dump(indent); }

DerivAutomaton import_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    bad(ex.what());
  }
  return automaton_from_json(j);
}

std::string export_dot(const DerivAutomaton& a) {
  std::ostringstream os;
  if (a.truncated) os << "// truncated: true\n";
  os << "digraph automaton {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=ellipse];\n";
  for (StateId q = 0; q < a.states.size(); ++q) {
    os << "  s" << q << " [label=\"" << escape(pretty(a.states[q])) << "\"";
    if (!a.finals[q].is_zero()) os << ", peripheries=2, xlabel=\"" << a.finals[q].to_string() << "\"";
    os << "];\n";
  }

  // Edges from `from` (already declared) for one monadic value; `tag` names
  // the dashed operad box when one is needed.
  auto edges = [&](const std::string& from, const std::string& label, const StateValue& v, const std::string& tag) {
    std::visit(
        [&](const auto& m) {
          using V = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<V, Maybe<StateId>>) {
            if (m) os << "  " << from << " -> s" << *m << " [label=\"" << label << "\"];\n";
          } else if constexpr (std::is_same_v<V, std::set<StateId>>) {
            for (StateId t : m) os << "  " << from << " -> s" << t << " [label=\"" << label << "\"];\n";
          } else if constexpr (std::is_same_v<V, LinComb<StateId>>) {
            for (const auto& [t, k] : m) {
              os << "  " << from << " -> s" << t << " [label=\"" << label;
              if (!label.empty()) os << " / ";
              os << k.to_string() << "\"];\n";
            }
          } else {
            if (m.slots.empty()) return;
            if (m.op.is(OperadTerm::Kind::Id) && m.slots[0].terms().begin()->second.is_one()) {
              os << "  " << from << " -> s" << m.slots[0].terms().begin()->first << " [label=\"" << label
                 << "\"];\n";
              return;
            }
            os << "  " << tag << " [shape=box, style=dashed, label=\"" << escape(to_string(m.op)) << "\"];\n";
            os << "  " << from << " -> " << tag << " [label=\"" << label << "\"];\n";
            for (std::size_t i = 0; i < m.slots.size(); ++i) {
              for (const auto& [t, k] : m.slots[i]) {
                os << "  " << tag << " -> s" << t << " [style=dashed, label=\"" << i + 1;
                if (!k.is_one()) os << " / " << k.to_string();
                os << "\"];\n";
              }
            }
          }
        },
        v);
  };

  os << "  __start [shape=none, label=\"\"];\n";
  edges("__start", "", a.initial, "op_init");
  for (const auto& [key, v] : a.transitions) {
    std::string label(1, key.second);
    edges("s" + std::to_string(key.first), label, v, "op_" + std::to_string(key.first) + "_" + label);
  }
  os << "}\n";
  return os.str();
}

}  // namespace monader
