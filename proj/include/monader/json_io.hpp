#pragma once

#include "json.hpp"
#include "monader/automaton.hpp"
#include "monader/supports.hpp"

namespace monader {

using Json = nlohmann::ordered_json;

// Support-shaped encodings (see export_json). Expression carriers are
// written with pretty().
Json to_json(const SupportValue& v);
Json to_json(const StateValue& v);

// Throws SyntaxError on a shape that does not match the support.
StateValue state_value_from_json(const Json& j, const SupportId& id);
SupportValue support_value_from_json(const Json& j, const SupportId& id);

Json to_json(const DerivAutomaton& a);
DerivAutomaton automaton_from_json(const Json& j);

}  // namespace monader
