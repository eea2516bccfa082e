#pragma once

#include <string>

#include <json.hpp>

#include "raag/ia_kernel.hpp"
#include "raag/qreduce.hpp"
#include "raag/stabilizer.hpp"
#include "raag/symplectic.hpp"

namespace raag {

using json = nlohmann::ordered_json;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Letters serialize as "a" / "a^-1".
std::string letter_to_string(const Graph& g, letter l);
letter letter_from_string(const Graph& g, const std::string& s);

json word_to_json(const Graph& g, const Word& w);

json factor_to_json(const Graph& g, const Factor& f);
Factor factor_from_json(const Graph& g, const json& j);
json automorphism_to_json(const Automorphism& a);
Automorphism automorphism_from_json(const Graph& g, const json& j);

json matrix_to_json(const IMat& m);
IMat matrix_from_json(const json& j);

json wedge_to_json(const Graph& g, const WedgeForm& w);
WedgeForm wedge_from_json(const Graph& g, const json& j);

json structure_to_json(const Structure& s);
Structure structure_from_json(const Graph& g, const json& j);

json qfactor_to_json(const Graph& g, const QFactor& f);
json identity_report_to_json(const IdentityReport& r);

}  // namespace raag
