#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tropbasis/constructors.hpp"
#include "tropbasis/matroid.hpp"
#include "tropbasis/tropical.hpp"

namespace trop {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr const char* kMatroidFormat = "matroid-circuits/v1";
inline constexpr const char* kGraphFormat = "graph/v1";
inline constexpr const char* kGf2Format = "gf2-matrix/v1";
inline constexpr const char* kSubsetFormat = "circuit-subset/v1";

// Parsers throw InvalidInput("parse-error") on malformed documents; the
// matroid parser additionally validates the circuit axioms.
nlohmann::json parse_json_text(const std::string& text);
CircuitMatroid matroid_from_json(const nlohmann::json& j);
Graph graph_from_json(const nlohmann::json& j);
Gf2Matrix gf2_from_json(const nlohmann::json& j);
std::vector<ElementSet> circuit_subset_from_json(const nlohmann::json& j);

nlohmann::json element_set_to_json(ElementSet s);
nlohmann::json circuit_list_to_json(const std::vector<ElementSet>& circuits);
nlohmann::json matroid_to_json(const CircuitMatroid& m);

}  // namespace trop
