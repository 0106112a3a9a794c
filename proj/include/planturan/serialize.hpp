#pragma once

#include <json.hpp>

#include "planturan/canon.hpp"
#include "planturan/constructions.hpp"
#include "planturan/counting.hpp"
#include "planturan/params.hpp"
#include "planturan/planarity.hpp"
#include "planturan/search.hpp"

namespace planturan {

// JSON views of library values. Objects use sorted keys, so dumps are
// byte-deterministic.
nlohmann::json to_json(const Graph & g);
nlohmann::json to_json(const CanonicalForm & f);
nlohmann::json to_json(const PlanarityVerdict & v);
nlohmann::json to_json(const BetaWitness & w);
nlohmann::json to_json(const TreePartition & p);
nlohmann::json to_json(const Certificate & c);
nlohmann::json to_json(const ConstructionOutput & out);
nlohmann::json to_json(const EmpiricalBound & b);
nlohmann::json to_json(const GrowthFit & f);
// Elapsed time is wall-clock dependent; leave it out for reproducible output.
nlohmann::json to_json(const ExtremalRecord & r, bool include_elapsed);

ExtremalRecord extremal_record_from_json(const nlohmann::json & j);

nlohmann::json vertex_lists(const std::vector<std::vector<Vertex>> & lists);

}
