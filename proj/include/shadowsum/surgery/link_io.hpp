#pragma once

#include <string>

#include "shadowsum/io/strict_json.hpp"
#include "shadowsum/surgery/surgery.hpp"

namespace shadowsum::surgery {

// Document layout, one of
//   {family: "empty"}
//   {family: "unknot", framing: n}
//   {family: "unlink", framings: [n1, ...]}
//   {diagram: {components: [{id, framing2, role: "omega"|"color", color?}],
//              arcs: [{id, component}],
//              crossings: [{id, under: [e, e], over: [e, e]}]},
//    graph?: {vertices: [{id, ends: [e, e, e]}]}}
// with arc ends e as in LinkCrossing, plus an optional "name" string.
FramedLink link_from_json(const io::json &j, const std::string &path = "$");
io::ordered_json link_to_json(const FramedLink &l);
FramedLink read_link(const std::string &file);
bool looks_like_link(const io::json &j);

} // namespace shadowsum::surgery
