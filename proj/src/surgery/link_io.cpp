#include "shadowsum/surgery/link_io.hpp"

#include "shadowsum/error.hpp"

namespace shadowsum::surgery {

using io::ObjectReader;

namespace {

Role parse_role(const std::string &s, const std::string &path) {
    if (s == "omega")
        return Role::omega;
    if (s == "color")
        return Role::color;
    throw ParseError(path + ": expected \"omega\" or \"color\", got \"" + s + "\"");
}

} // namespace

FramedLink link_from_json(const io::json &j, const std::string &path) {
    ObjectReader doc(j, path);
    doc.opt_string("name");
    FramedLink l;
    if (doc.has("family")) {
        const std::string family = doc.string("family");
        if (family == "empty") {
            l = empty_link();
        } else if (family == "unknot") {
            l = unknot(doc.integer("framing"));
        } else if (family == "unlink") {
            std::vector<int> framings;
            for (const auto &[item, where] : doc.array("framings"))
                framings.push_back(io::as_integer(*item, where));
            l = unlink(std::move(framings));
        } else {
            throw ParseError(doc.path("family") + ": unknown family \"" + family + "\"");
        }
        doc.finish();
        return l;
    }

    LinkDiagram d;
    ObjectReader dia(doc.raw("diagram"), doc.path("diagram"));
    for (const auto &[item, where] : dia.array("components")) {
        ObjectReader o(*item, where);
        Component c;
        c.id = o.integer("id");
        c.framing2 = o.opt_integer("framing2").value_or(0);
        c.role = parse_role(o.string("role"), o.path("role"));
        c.color = o.opt_integer("color");
        o.finish();
        d.components.push_back(c);
    }
    for (const auto &[item, where] : dia.array("arcs")) {
        ObjectReader o(*item, where);
        LinkArc a;
        a.id = o.integer("id");
        a.component = o.integer("component");
        o.finish();
        d.arcs.push_back(a);
    }
    for (const auto &[item, where] : dia.array("crossings", true)) {
        ObjectReader o(*item, where);
        LinkCrossing x;
        x.id = o.integer("id");
        x.under = o.fixed<2, int>("under");
        x.over = o.fixed<2, int>("over");
        o.finish();
        d.crossings.push_back(x);
    }
    dia.finish();
    if (doc.has("graph")) {
        ObjectReader g(doc.raw("graph"), doc.path("graph"));
        for (const auto &[item, where] : g.array("vertices")) {
            ObjectReader o(*item, where);
            GraphVertex v;
            v.id = o.integer("id");
            v.ends = o.fixed<3, int>("ends");
            o.finish();
            d.vertices.push_back(v);
        }
        g.finish();
    }
    doc.finish();
    return from_diagram(std::move(d));
}

io::ordered_json link_to_json(const FramedLink &l) {
    io::ordered_json j = io::ordered_json::object();
    switch (l.kind) {
    case FramedLink::Kind::empty:
        j["family"] = "empty";
        return j;
    case FramedLink::Kind::unlink:
        if (l.framings.size() == 1) {
            j["family"] = "unknot";
            j["framing"] = l.framings[0];
        } else {
            j["family"] = "unlink";
            j["framings"] = l.framings;
        }
        return j;
    case FramedLink::Kind::diagram:
        break;
    }
    const LinkDiagram &d = l.diagram;
    io::ordered_json dia = io::ordered_json::object();
    dia["components"] = io::ordered_json::array();
    for (const auto &c : d.components) {
        io::ordered_json o;
        o["id"] = c.id;
        o["framing2"] = c.framing2;
        o["role"] = c.role == Role::omega ? "omega" : "color";
        if (c.color)
            o["color"] = *c.color;
        dia["components"].push_back(o);
    }
    dia["arcs"] = io::ordered_json::array();
    for (const auto &a : d.arcs)
        dia["arcs"].push_back({{"id", a.id}, {"component", a.component}});
    dia["crossings"] = io::ordered_json::array();
    for (const auto &x : d.crossings)
        dia["crossings"].push_back({{"id", x.id}, {"under", x.under}, {"over", x.over}});
    j["diagram"] = dia;
    if (!d.vertices.empty()) {
        io::ordered_json g;
        g["vertices"] = io::ordered_json::array();
        for (const auto &v : d.vertices)
            g["vertices"].push_back({{"id", v.id}, {"ends", v.ends}});
        j["graph"] = g;
    }
    return j;
}

FramedLink read_link(const std::string &file) { return link_from_json(io::read_file(file), file); }

bool looks_like_link(const io::json &j) { return j.is_object() && (j.contains("family") || j.contains("diagram")); }

} // namespace shadowsum::surgery
