#include "shadowsum/shadow/shadow_io.hpp"

namespace shadowsum::shadow {

using io::ObjectReader;

Shadow shadow_from_json(const io::json &j, const std::string &path) {
    ObjectReader doc(j, path);
    Shadow s;
    doc.opt_string("name");
    for (const auto &[item, where] : doc.array("regions")) {
        ObjectReader o(*item, where);
        Region r;
        r.id = o.integer("id");
        r.gleam2 = o.integer("gleam2");
        r.chi = o.integer("chi");
        r.external = o.opt_boolean("external").value_or(false);
        r.color = o.opt_integer("color");
        r.orientable = o.opt_boolean("orientable");
        o.finish();
        s.regions.push_back(r);
    }
    for (const auto &[item, where] : doc.array("edges", true)) {
        ObjectReader o(*item, where);
        InternalEdge e;
        e.id = o.integer("id");
        e.chi = o.integer("chi");
        e.regions = o.fixed<3, int>("regions");
        if (o.has("signs"))
            e.signs = o.fixed<3, int>("signs");
        if (o.has("nonorientable"))
            e.nonorientable = o.fixed<3, bool>("nonorientable");
        o.finish();
        s.edges.push_back(e);
    }
    for (const auto &[item, where] : doc.array("vertices", true)) {
        ObjectReader o(*item, where);
        InternalVertex v;
        v.id = o.integer("id");
        v.tet = o.fixed<6, int>("tet");
        o.finish();
        s.vertices.push_back(v);
    }
    for (const auto &[item, where] : doc.array("boundary_edges", true)) {
        ObjectReader o(*item, where);
        BoundaryEdge b;
        b.id = o.integer("id");
        b.chi = o.integer("chi");
        b.region = o.integer("region");
        b.color = o.integer("color");
        o.finish();
        s.boundary_edges.push_back(b);
    }
    for (const auto &[item, where] : doc.array("boundary_vertices", true)) {
        ObjectReader o(*item, where);
        BoundaryVertex b;
        b.id = o.integer("id");
        b.edges = o.fixed<3, int>("edges");
        o.finish();
        s.boundary_vertices.push_back(b);
    }
    s.sigma = doc.opt_integer("sigma");
    doc.finish();
    return s;
}

io::ordered_json shadow_to_json(const Shadow &s) {
    io::ordered_json doc = io::ordered_json::object();
    io::ordered_json regions = io::ordered_json::array();
    for (const auto &r : s.regions) {
        io::ordered_json o{{"id", r.id}, {"gleam2", r.gleam2}, {"chi", r.chi}};
        if (r.external)
            o["external"] = true;
        if (r.color)
            o["color"] = *r.color;
        if (r.orientable)
            o["orientable"] = *r.orientable;
        regions.push_back(o);
    }
    doc["regions"] = regions;
    if (!s.edges.empty()) {
        io::ordered_json edges = io::ordered_json::array();
        for (const auto &e : s.edges) {
            io::ordered_json o{{"id", e.id}, {"chi", e.chi}, {"regions", e.regions}};
            if (e.signs)
                o["signs"] = *e.signs;
            if (e.nonorientable)
                o["nonorientable"] = *e.nonorientable;
            edges.push_back(o);
        }
        doc["edges"] = edges;
    }
    if (!s.vertices.empty()) {
        io::ordered_json vertices = io::ordered_json::array();
        for (const auto &v : s.vertices)
            vertices.push_back({{"id", v.id}, {"tet", v.tet}});
        doc["vertices"] = vertices;
    }
    if (!s.boundary_edges.empty()) {
        io::ordered_json be = io::ordered_json::array();
        for (const auto &b : s.boundary_edges)
            be.push_back({{"id", b.id}, {"chi", b.chi}, {"region", b.region}, {"color", b.color}});
        doc["boundary_edges"] = be;
    }
    if (!s.boundary_vertices.empty()) {
        io::ordered_json bv = io::ordered_json::array();
        for (const auto &b : s.boundary_vertices)
            bv.push_back({{"id", b.id}, {"edges", b.edges}});
        doc["boundary_vertices"] = bv;
    }
    if (s.sigma)
        doc["sigma"] = *s.sigma;
    return doc;
}

Shadow read_shadow(const std::string &file) { return shadow_from_json(io::read_file(file), file); }

bool looks_like_shadow(const io::json &j) { return j.is_object() && j.contains("regions"); }

} // namespace shadowsum::shadow
