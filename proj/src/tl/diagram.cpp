#include "shadowsum/tl/diagram.hpp"

#include <numeric>
#include <sstream>

#include "shadowsum/error.hpp"

namespace shadowsum::tl {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

void FramedGraphDiagram::build_sites(std::vector<EndSite> &sites) const {
    sites.assign(2 * arcs.size(), EndSite{});
    auto place = [&](ArcEnd e, EndSite::Kind kind, int node, int slot) {
        if (e.arc < 0 || e.arc >= static_cast<int>(arcs.size()) || (e.side != 0 && e.side != 1))
            return;
        sites[2 * e.arc + e.side] = EndSite{kind, node, slot};
    };
    for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
        for (int k = 0; k < 4; ++k)
            place(crossings[c].ends[k], EndSite::AtCrossing, c, k);
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        for (int k = 0; k < 3; ++k)
            place(vertices[v].ends[k], EndSite::AtVertex, v, k);
}

EndSite FramedGraphDiagram::site(ArcEnd e) const {
    for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
        for (int k = 0; k < 4; ++k)
            if (crossings[c].ends[k] == e)
                return {EndSite::AtCrossing, c, k};
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        for (int k = 0; k < 3; ++k)
            if (vertices[v].ends[k] == e)
                return {EndSite::AtVertex, v, k};
    return {};
}

std::vector<std::string> FramedGraphDiagram::validate() const {
    std::vector<std::string> issues;
    const int na = static_cast<int>(arcs.size());
    std::vector<int> uses(2 * na, 0);
    auto note = [&](ArcEnd e, const std::string &where) {
        if (e.arc < 0 || e.arc >= na) {
            issues.push_back(where + " refers to missing arc " + std::to_string(e.arc));
            return;
        }
        if (e.side != 0 && e.side != 1) {
            issues.push_back(where + " has invalid arc side " + std::to_string(e.side));
            return;
        }
        ++uses[2 * e.arc + e.side];
    };
    for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
        for (const auto &e : crossings[c].ends)
            note(e, "crossing " + std::to_string(c));
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        for (const auto &e : vertices[v].ends)
            note(e, "vertex " + std::to_string(v));
    for (int a = 0; a < na; ++a) {
        if (arcs[a].color < 0)
            issues.push_back("arc " + std::to_string(a) + " has negative color");
        for (int side = 0; side < 2; ++side) {
            const int u = uses[2 * a + side];
            if (arcs[a].closed && u != 0)
                issues.push_back("closed arc " + std::to_string(a) + " is attached to a node");
            if (!arcs[a].closed && u != 1)
                issues.push_back("end " + std::to_string(side) + " of arc " + std::to_string(a) +
                                 " is used " + std::to_string(u) + " times");
        }
    }
    if (!issues.empty())
        return issues;

    for (const auto &chain : chains()) {
        const int color = arcs[chain.arcs.front()].color;
        for (int a : chain.arcs)
            if (arcs[a].color != color) {
                issues.push_back("arcs " + std::to_string(chain.arcs.front()) + " and " +
                                 std::to_string(a) + " lie on one strand but differ in color");
                break;
            }
    }
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
        const int a = arcs[vertices[v].ends[0].arc].color;
        const int b = arcs[vertices[v].ends[1].arc].color;
        const int c = arcs[vertices[v].ends[2].arc].color;
        if (a > b + c || b > a + c || c > a + b || (a + b + c) % 2 != 0)
            issues.push_back("vertex " + std::to_string(v) + " has non-admissible colors (" +
                             std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                             ")");
    }

    // Planarity: every connected component of the rotation system must have
    // Euler characteristic 2.
    const int nc = static_cast<int>(crossings.size());
    const int nodes = nc + static_cast<int>(vertices.size());
    if (nodes == 0)
        return issues;
    std::vector<EndSite> sites;
    build_sites(sites);
    auto node_of = [&](const EndSite &s) { return s.kind == EndSite::AtCrossing ? s.node : nc + s.node; };
    auto degree = [&](int node) { return node < nc ? 4 : 3; };
    auto end_at = [&](int node, int slot) {
        return node < nc ? crossings[node].ends[slot] : vertices[node - nc].ends[slot];
    };
    DisjointSets comps(nodes);
    int edges = 0;
    for (int a = 0; a < na; ++a) {
        if (arcs[a].closed)
            continue;
        ++edges;
        comps.unite(node_of(sites[2 * a]), node_of(sites[2 * a + 1]));
    }
    // Darts are (node, slot); dart ids are offsets into this table.
    std::vector<int> offset(nodes + 1, 0);
    for (int n = 0; n < nodes; ++n)
        offset[n + 1] = offset[n] + degree(n);
    std::vector<char> seen(offset[nodes], 0);
    int faces = 0;
    for (int n = 0; n < nodes; ++n)
        for (int k = 0; k < degree(n); ++k) {
            if (seen[offset[n] + k])
                continue;
            ++faces;
            int cn = n, ck = k;
            while (!seen[offset[cn] + ck]) {
                seen[offset[cn] + ck] = 1;
                const ArcEnd e = end_at(cn, ck);
                const EndSite &far = sites[2 * e.arc + (1 - e.side)];
                cn = node_of(far);
                ck = (far.slot + 1) % degree(cn);
            }
        }
    int components = 0;
    for (int n = 0; n < nodes; ++n)
        if (comps.find(n) == n)
            ++components;
    if (nodes - edges + faces != 2 * components)
        issues.push_back("diagram is not planar (V - E + F = " + std::to_string(nodes - edges + faces) +
                         " for " + std::to_string(components) + " components)");
    return issues;
}

void FramedGraphDiagram::check() const {
    const auto issues = validate();
    if (issues.empty())
        return;
    std::ostringstream os;
    os << "invalid diagram:";
    for (const auto &i : issues)
        os << " " << i << ";";
    throw ValidationError(os.str());
}

std::vector<Chain> FramedGraphDiagram::chains() const {
    std::vector<EndSite> sites;
    build_sites(sites);
    const int na = static_cast<int>(arcs.size());
    std::vector<char> used(na, 0);
    std::vector<Chain> out;

    // Walks from arc `a` entered at `side` until a vertex or the start arc.
    auto walk = [&](int a, int side, Chain &chain) {
        const int first = a;
        while (true) {
            used[a] = 1;
            chain.arcs.push_back(a);
            chain.forward.push_back(side == 0);
            const EndSite &far = sites[2 * a + (1 - side)];
            if (far.kind != EndSite::AtCrossing)
                return;
            const ArcEnd next = crossings[far.node].ends[(far.slot + 2) % 4];
            if (next.arc == first) {
                chain.closed = true;
                return;
            }
            if (used[next.arc])
                return;
            a = next.arc;
            side = next.side;
        }
    };

    for (const auto &v : vertices)
        for (const auto &e : v.ends) {
            if (e.arc < 0 || e.arc >= na || used[e.arc])
                continue;
            Chain chain;
            walk(e.arc, e.side, chain);
            out.push_back(std::move(chain));
        }
    for (int a = 0; a < na; ++a) {
        if (used[a])
            continue;
        Chain chain;
        if (arcs[a].closed) {
            used[a] = 1;
            chain.arcs.push_back(a);
            chain.forward.push_back(true);
            chain.closed = true;
        } else {
            walk(a, 0, chain);
        }
        out.push_back(std::move(chain));
    }
    return out;
}

std::vector<int> FramedGraphDiagram::chain_of_arc() const {
    std::vector<int> owner(arcs.size(), -1);
    const auto cs = chains();
    for (int i = 0; i < static_cast<int>(cs.size()); ++i)
        for (int a : cs[i].arcs)
            owner[a] = i;
    return owner;
}

int FramedGraphDiagram::crossing_sign(int c) const {
    const auto &x = crossings.at(c);
    if ((x.ends[0].side == 1) == (x.ends[2].side == 1) || (x.ends[1].side == 1) == (x.ends[3].side == 1))
        throw ValidationError("crossing " + std::to_string(c) + " joins inconsistently oriented arcs");
    const int under_y = x.ends[0].side == 1 ? 1 : -1;
    const int over_x = x.ends[1].side == 1 ? -1 : 1;
    return under_y * over_x;
}

bool FramedGraphDiagram::orientations_consistent() const {
    for (const auto &x : crossings)
        if ((x.ends[0].side == 1) == (x.ends[2].side == 1) ||
            (x.ends[1].side == 1) == (x.ends[3].side == 1))
            return false;
    return true;
}

int FramedGraphDiagram::writhe() const {
    int w = 0;
    for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
        w += crossing_sign(c);
    return w;
}

void FramedGraphDiagram::reverse_chain(const Chain &chain) {
    std::vector<char> in(arcs.size(), 0);
    for (int a : chain.arcs)
        in[a] = 1;
    for (auto &x : crossings)
        for (auto &e : x.ends)
            if (in[e.arc])
                e.side ^= 1;
    for (auto &v : vertices)
        for (auto &e : v.ends)
            if (in[e.arc])
                e.side ^= 1;
}

} // namespace shadowsum::tl
