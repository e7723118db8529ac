#ifndef LEGENDRIAN_JSON_IO_HPP
#define LEGENDRIAN_JSON_IO_HPP

#include "legendrian/front_diagram.hpp"
#include "legendrian/theta.hpp"

#include <json.hpp>

#include <string>

namespace legendrian {

using Json = nlohmann::json;

// Diagram documents:
//   {"edges":[...], "events":[{"kind":"lcusp"|"rcusp"|"cross"|"vertex", "pos":1, ...}],
//    "trusted_trivial":bool, "vertices":[{"id":..., "valence":n}]}
// Keys are sorted, so dump() output is canonical.
Json diagram_to_json(const FrontDiagram &diagram);
FrontDiagram diagram_from_json(const Json &doc);

std::string diagram_to_text(const FrontDiagram &diagram);
FrontDiagram diagram_from_text(const std::string &text);

Json vec_to_json(const Vec3 &v);
Json invariants_to_json(const ThetaInvariants &inv);
Json key_to_json(const EmbeddingKey &key);

// Canonical rendering used for every emitted document.
std::string canonical(const Json &doc);

} // namespace legendrian

#endif
