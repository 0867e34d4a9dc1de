#pragma once

#include <string>

#include "json.hpp"
#include "matroidlab/branch_decomposition.hpp"
#include "matroidlab/removal.hpp"
#include "matroidlab/tangle.hpp"

namespace matroidlab::io {

using nlohmann::json;

// Matroid file format. "type" is one of uniform | graphic | linear | relax |
// minor | dual; an optional "labels" array renames the elements.
matroid load_matroid(const json& j, int max_n = max_ground_size);
matroid load_matroid_file(const std::string& path, int max_n = max_ground_size);

// Witness encodings; everything is written in element labels so a witness can
// be reloaded against its host and re-verified.
json minor_spec_to_json(const matroid& host, const minor_spec& spec);
minor_spec minor_spec_from_json(const matroid& host, const json& j);

json tangle_to_json(const tangle& t);
std::vector<subset> tangle_members_from_json(const matroid& host, const json& j);

json decomposition_to_json(const matroid& host, const bd_node& root);
bd_node decomposition_from_json(const matroid& host, const json& j);

json removal_result_to_json(const matroid& host, const removal_result& r);
removal_result removal_result_from_json(const matroid& host, const json& j);

json labels_json(const matroid& host, subset s);
subset labels_from_json(const matroid& host, const json& j);

}  // namespace matroidlab::io
