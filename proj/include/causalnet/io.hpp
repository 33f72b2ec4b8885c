#pragma once

#include "causalnet/oracle.hpp"

#include "json.hpp"
#include <variant>

namespace causalnet {

using Model = std::variant<ContextualNet, Pes, Bes, Cdes, EventAutomaton>;

std::string kind_of(const Model& m);  // contextual-net, pes, bes, cdes, ea

// Throws Error(parse) naming the offending field.
Model parse_model(const nlohmann::json& j);
Model parse_model_text(const std::string& text);
Model parse_model_file(const std::string& path);

// Canonical form: sorted identifiers, stable array order.
nlohmann::json to_json(const Model& m);
std::string serialize_model(const Model& m);
void write_model_file(const Model& m, const std::string& path);

nlohmann::json to_json(const ModelReport& r);
nlohmann::json to_json(const Family& f);
nlohmann::json to_json(const oracle::RoundTripVerdict& v);

std::string to_dot(const ContextualNet& net);
std::string to_dot(const EventAutomaton& ea);

}  // namespace causalnet
