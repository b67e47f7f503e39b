#pragma once

#include <string>

#include "shadowsum/io/strict_json.hpp"
#include "shadowsum/shadow/shadow.hpp"

namespace shadowsum::shadow {

// Document layout (all keys other than "regions" optional):
//   regions:           [{id, gleam2, chi, external?, color?, orientable?}]
//   edges:             [{id, chi, regions: [3 ids], signs?: [3], nonorientable?: [3 bools]}]
//   vertices:          [{id, tet: [6 region ids, slots a..f]}]
//   boundary_edges:    [{id, chi, region, color}]
//   boundary_vertices: [{id, edges: [3 boundary edge ids]}]
//   sigma:             integer
//   name:              string, ignored
Shadow shadow_from_json(const io::json &j, const std::string &path = "$");
io::ordered_json shadow_to_json(const Shadow &s);
Shadow read_shadow(const std::string &file);
bool looks_like_shadow(const io::json &j);

} // namespace shadowsum::shadow
