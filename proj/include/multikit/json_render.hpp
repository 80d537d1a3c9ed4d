#ifndef MULTIKIT_JSON_RENDER_HPP
#define MULTIKIT_JSON_RENDER_HPP

#include <string>

#include "multikit/extensions.hpp"
#include "multikit/ideals.hpp"
#include "multikit/quotients.hpp"

// Stable-ordered JSON rendering of the core value types: object keys are
// sorted (nlohmann::json default map), arrays use canonical element order,
// so equal inputs render byte-identically.

namespace multikit {

std::string set_names_json(const FiniteSuperring& s, const ElemSet& e);

std::string report_json(const FiniteSuperring& s);
std::string structure_json(const FiniteSuperring& s);
std::string ideals_json(const FiniteSuperring& s, const std::vector<IdealSet>& ideals);
std::string morphism_json(const MorphismTable& m);
std::string tower_json(const Tower& t);

} // namespace multikit

#endif
