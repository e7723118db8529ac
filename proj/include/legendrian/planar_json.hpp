#ifndef LEGENDRIAN_PLANAR_JSON_HPP
#define LEGENDRIAN_PLANAR_JSON_HPP

#include "legendrian/json_io.hpp"
#include "legendrian/planar.hpp"

#include <string>

namespace legendrian {

// Map documents:
//   {"vertices":["a","b"], "edges":[["a","b"], ...], "rotation":{"a":[0, ...], ...}}
// Endpoints may be vertex names or 0-based indices. Edge e has edge-ends 2e
// (at its first endpoint) and 2e+1 (at its second).
Json map_to_json(const PlanarMap &map);
PlanarMap map_from_json(const Json &doc);
PlanarMap map_from_text(const std::string &text);

Json certificate_to_json(const Certificate &cert);
Json theta_witness_to_json(const PlanarMap &map, const ThetaWitness &w);
Json wedge_witness_to_json(const PlanarMap &map, const WedgeWitness &w);
Json family_to_json(const Family &family);

} // namespace legendrian

#endif
