#include "shadowsum/surgery/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/recoupling/recoupling.hpp"
#include "shadowsum/tl/bracket.hpp"

namespace shadowsum::surgery {

namespace {

template <class T>
void check_ids(const std::vector<T> &xs, const char *what, std::vector<std::string> &issues) {
    std::set<int> seen;
    for (const auto &x : xs)
        if (!seen.insert(x.id).second)
            issues.push_back(std::string("duplicate ") + what + " id " + std::to_string(x.id));
}

std::map<int, int> index_of(const std::vector<LinkArc> &arcs) {
    std::map<int, int> idx;
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        idx.emplace(arcs[i].id, i);
    return idx;
}

std::map<int, int> component_index(const LinkDiagram &d) {
    std::map<int, int> idx;
    for (int i = 0; i < static_cast<int>(d.components.size()); ++i)
        idx.emplace(d.components[i].id, i);
    return idx;
}

template <class F>
void for_each_end(const LinkDiagram &d, F f) {
    for (const auto &x : d.crossings) {
        const std::string where = "crossing " + std::to_string(x.id);
        for (int e : x.under)
            f(e, where);
        for (int e : x.over)
            f(e, where);
    }
    for (const auto &v : d.vertices)
        for (int e : v.ends)
            f(e, "vertex " + std::to_string(v.id));
}

// Component index of every chain of the tl diagram.
std::vector<int> chain_components(const LinkDiagram &d, const std::vector<tl::Chain> &chains) {
    const auto comp = component_index(d);
    std::vector<int> out;
    for (const auto &ch : chains)
        out.push_back(comp.at(d.arcs[ch.arcs.front()].component));
    return out;
}

tl::FramedGraphDiagram build(const LinkDiagram &d, const std::vector<int> &omega_colors, bool offsets) {
    const auto arc = index_of(d.arcs);
    const auto comp = component_index(d);
    tl::FramedGraphDiagram t;
    t.arcs.resize(d.arcs.size());
    std::vector<int> omega_pos(d.components.size(), -1);
    int k = 0;
    for (std::size_t i = 0; i < d.components.size(); ++i)
        if (d.components[i].role == Role::omega)
            omega_pos[i] = k++;
    std::vector<char> referenced(d.arcs.size(), 0), framed(d.components.size(), 0);
    auto end = [&](int e) {
        const int a = arc.at(std::abs(e));
        referenced[a] = 1;
        return tl::ArcEnd{a, e > 0 ? 1 : 0};
    };
    for (const auto &x : d.crossings)
        t.crossings.push_back({{end(x.under[0]), end(x.over[0]), end(x.under[1]), end(x.over[1])}});
    for (const auto &v : d.vertices)
        t.vertices.push_back({{end(v.ends[0]), end(v.ends[1]), end(v.ends[2])}});
    for (std::size_t a = 0; a < d.arcs.size(); ++a) {
        const int ci = comp.at(d.arcs[a].component);
        const Component &c = d.components[ci];
        auto &out = t.arcs[a];
        if (c.role == Role::omega)
            out.color = omega_pos[ci] < static_cast<int>(omega_colors.size()) ? omega_colors[omega_pos[ci]] : 1;
        else
            out.color = c.color.value_or(0);
        out.closed = !referenced[a];
        if (offsets && !framed[ci]) {
            out.framing2 = c.framing2;
            framed[ci] = 1;
        }
    }
    return t;
}

std::string join(const std::vector<std::string> &xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "; " : "") << xs[i];
    return os.str();
}

} // namespace

FramedLink empty_link() { return {}; }

FramedLink unlink(std::vector<int> framings) {
    FramedLink l;
    l.kind = FramedLink::Kind::unlink;
    l.framings = std::move(framings);
    return l;
}

FramedLink from_diagram(LinkDiagram d) {
    FramedLink l;
    l.kind = FramedLink::Kind::diagram;
    l.diagram = std::move(d);
    return l;
}

LinkDiagram diagram_from_builder(const tl::SliceBuilder::Result &b, std::vector<Component> components) {
    LinkDiagram d;
    d.components = std::move(components);
    const auto &t = b.diagram;
    // Arcs traversed backwards along their chain are reversed so that every
    // component is consistently oriented.
    std::vector<char> backwards(t.arcs.size(), 0);
    for (const auto &ch : t.chains())
        for (std::size_t k = 0; k < ch.arcs.size(); ++k)
            backwards[ch.arcs[k]] = !ch.forward[k];
    auto signed_end = [&](tl::ArcEnd e) {
        const int side = backwards[e.arc] ? 1 - e.side : e.side;
        return side == 1 ? e.arc + 1 : -(e.arc + 1);
    };
    for (std::size_t a = 0; a < t.arcs.size(); ++a) {
        const int tag = b.arc_tags[a];
        if (tag < 0 || tag >= static_cast<int>(d.components.size()))
            throw ValidationError("arc " + std::to_string(a) + " has no component");
        d.arcs.push_back({static_cast<int>(a) + 1, d.components[tag].id});
        d.components[tag].framing2 += t.arcs[a].framing2;
    }
    for (std::size_t c = 0; c < t.crossings.size(); ++c) {
        const auto &e = t.crossings[c].ends;
        d.crossings.push_back(
            {static_cast<int>(c) + 1, {signed_end(e[0]), signed_end(e[2])}, {signed_end(e[1]), signed_end(e[3])}});
    }
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
        const auto &e = t.vertices[v].ends;
        d.vertices.push_back({static_cast<int>(v) + 1, {signed_end(e[0]), signed_end(e[1]), signed_end(e[2])}});
    }
    return d;
}

LinkDiagram disjoint_union(const LinkDiagram &x, const LinkDiagram &y) {
    auto top = [](const auto &xs) {
        int m = 0;
        for (const auto &v : xs)
            m = std::max(m, v.id);
        return m;
    };
    const int dc = top(x.components), da = top(x.arcs), dx = top(x.crossings), dv = top(x.vertices);
    auto shift = [&](int e) { return e > 0 ? e + da : e - da; };
    LinkDiagram d = x;
    for (auto c : y.components) {
        c.id += dc;
        d.components.push_back(c);
    }
    for (auto a : y.arcs) {
        a.id += da;
        a.component += dc;
        d.arcs.push_back(a);
    }
    for (auto c : y.crossings) {
        c.id += dx;
        for (int &e : c.under)
            e = shift(e);
        for (int &e : c.over)
            e = shift(e);
        d.crossings.push_back(c);
    }
    for (auto v : y.vertices) {
        v.id += dv;
        for (int &e : v.ends)
            e = shift(e);
        d.vertices.push_back(v);
    }
    return d;
}

std::vector<std::string> validate(const LinkDiagram &d) {
    std::vector<std::string> issues;
    check_ids(d.components, "component", issues);
    check_ids(d.arcs, "arc", issues);
    check_ids(d.crossings, "crossing", issues);
    check_ids(d.vertices, "vertex", issues);
    const auto comp = component_index(d);
    const auto arc = index_of(d.arcs);
    for (const auto &c : d.components) {
        const std::string where = "component " + std::to_string(c.id);
        if (c.role == Role::omega && c.color)
            issues.push_back(where + " is Omega-coloured and cannot carry a colour");
        if (c.role == Role::color && !c.color)
            issues.push_back(where + " needs a colour");
        if (c.color && *c.color < 0)
            issues.push_back(where + " has a negative colour");
        if (c.role == Role::omega && c.framing2 % 2 != 0)
            issues.push_back(where + " is a surgery component with a half-integer framing");
    }
    for (const auto &a : d.arcs)
        if (!comp.count(a.component))
            issues.push_back("arc " + std::to_string(a.id) + " references missing component " +
                             std::to_string(a.component));
    for_each_end(d, [&](int e, const std::string &where) {
        if (e == 0 || !arc.count(std::abs(e)))
            issues.push_back(where + " references missing arc " + std::to_string(std::abs(e)));
    });
    if (!issues.empty())
        return issues;

    const auto t = build(d, {}, true);
    for (const auto &s : t.validate())
        issues.push_back(s);
    if (!issues.empty())
        return issues;
    const auto chains = t.chains();
    std::vector<int> count(d.components.size(), 0);
    for (const auto &ch : chains) {
        const int c0 = d.arcs[ch.arcs.front()].component;
        for (int a : ch.arcs)
            if (d.arcs[a].component != c0)
                issues.push_back("arcs " + std::to_string(d.arcs[ch.arcs.front()].id) + " and " +
                                 std::to_string(d.arcs[a].id) + " are joined but lie on different components");
        const int ci = comp.at(c0);
        ++count[ci];
        if (d.components[ci].role == Role::omega && !ch.closed)
            issues.push_back("component " + std::to_string(c0) + " is Omega-coloured but meets a vertex");
    }
    for (std::size_t i = 0; i < d.components.size(); ++i)
        if (count[i] != 1)
            issues.push_back("component " + std::to_string(d.components[i].id) + " consists of " +
                             std::to_string(count[i]) + " strands, expected 1");
    return issues;
}

void check(const LinkDiagram &d) {
    const auto issues = validate(d);
    if (!issues.empty())
        throw ValidationError("invalid link diagram: " + join(issues));
}

tl::FramedGraphDiagram to_tl(const LinkDiagram &d, const std::vector<int> &omega_colors) {
    check(d);
    return build(d, omega_colors, true);
}

std::vector<int> omega_components(const LinkDiagram &d) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(d.components.size()); ++i)
        if (d.components[i].role == Role::omega)
            out.push_back(i);
    return out;
}

LinkDiagram reverse_component(const LinkDiagram &d, int i) {
    const int id = d.components.at(i).id;
    std::set<int> arcs;
    for (const auto &a : d.arcs)
        if (a.component == id)
            arcs.insert(a.id);
    LinkDiagram out = d;
    auto flip = [&](int &e) {
        if (arcs.count(std::abs(e)))
            e = -e;
    };
    for (auto &x : out.crossings) {
        for (int &e : x.under)
            flip(e);
        for (int &e : x.over)
            flip(e);
    }
    for (auto &v : out.vertices)
        for (int &e : v.ends)
            flip(e);
    return out;
}

std::vector<std::vector<long long>> linking_matrix(const FramedLink &l) {
    if (l.kind == FramedLink::Kind::empty)
        return {};
    if (l.kind == FramedLink::Kind::unlink) {
        const std::size_t g = l.framings.size();
        std::vector<std::vector<long long>> m(g, std::vector<long long>(g, 0));
        for (std::size_t i = 0; i < g; ++i)
            m[i][i] = l.framings[i];
        return m;
    }
    const LinkDiagram &d = l.diagram;
    const auto t = to_tl(d);
    if (!t.orientations_consistent())
        throw ValidationError("linking numbers need consistently oriented components");
    const auto chains = t.chains();
    const auto chain_comp = chain_components(d, chains);
    std::vector<int> comp_of_arc(d.arcs.size());
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (int a : chains[c].arcs)
            comp_of_arc[a] = chain_comp[c];

    const auto omega = omega_components(d);
    std::vector<int> pos(d.components.size(), -1);
    for (std::size_t i = 0; i < omega.size(); ++i)
        pos[omega[i]] = static_cast<int>(i);
    const std::size_t g = omega.size();
    std::vector<std::vector<long long>> twice(g, std::vector<long long>(g, 0));
    for (std::size_t c = 0; c < t.crossings.size(); ++c) {
        const int i = pos[comp_of_arc[t.crossings[c].ends[0].arc]];
        const int j = pos[comp_of_arc[t.crossings[c].ends[1].arc]];
        if (i < 0 || j < 0)
            continue;
        const int s = t.crossing_sign(static_cast<int>(c));
        if (i == j) {
            twice[i][i] += 2 * s;
        } else {
            twice[i][j] += s;
            twice[j][i] += s;
        }
    }
    std::vector<std::vector<long long>> m(g, std::vector<long long>(g, 0));
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            if (twice[i][j] % 2 != 0)
                throw InternalError("odd crossing count between two components");
            m[i][j] = twice[i][j] / 2;
        }
        m[i][i] += d.components[omega[i]].framing2 / 2;
    }
    return m;
}

int signature(const FramedLink &l) { return arith::signature(linking_matrix(l)); }

OmegaEvaluation omega_evaluation(const RootContext &ctx, const FramedLink &l, const SurgeryOptions &opts) {
    const int top = ctx.r() - 2;
    if (l.kind == FramedLink::Kind::empty)
        return {1.0, 1};
    if (l.kind == FramedLink::Kind::unlink) {
        OmegaEvaluation out{1.0, 1};
        for (int f : l.framings) {
            out.value *= recoupling::omega_unknot(ctx, f);
            out.terms *= top + 1;
        }
        return out;
    }

    const LinkDiagram &d = l.diagram;
    check(d);
    for (const auto &c : d.components)
        if (c.color && *c.color > top)
            throw DomainError("component " + std::to_string(c.id) + " has colour " + std::to_string(*c.color) +
                              " above r - 2 = " + std::to_string(top));
    {
        const auto t = build(d, {}, true);
        for (std::size_t v = 0; v < t.vertices.size(); ++v) {
            const auto &e = t.vertices[v].ends;
            const recoupling::ColorTriple c{t.arcs[e[0].arc].color, t.arcs[e[1].arc].color, t.arcs[e[2].arc].color};
            if (!recoupling::is_q_admissible(ctx, c))
                throw DomainError("vertex " + std::to_string(d.vertices[v].id) + " is not q-admissible");
        }
    }

    const auto omega = omega_components(d);
    const std::size_t g = omega.size();
    const tl::BracketOptions bo{opts.budget, opts.mirror};
    std::vector<int> colors(g, 0);
    OmegaEvaluation out{0.0, 0};
    while (true) {
        Complex w = 1.0;
        for (int c : colors)
            w *= recoupling::delta_value(ctx, c);
        out.value += w * tl::bracket_numeric(ctx, build(d, colors, true), bo);
        ++out.terms;
        std::size_t i = 0;
        while (i < g && colors[i] == top)
            colors[i++] = 0;
        if (i == g)
            break;
        ++colors[i];
    }
    out.value *= std::pow(arith::eta(ctx), static_cast<int>(g));
    return out;
}

SurgeryInvariant invariant_from_surgery(const RootContext &ctx, const FramedLink &l, const SurgeryOptions &opts) {
    SurgeryInvariant out;
    out.linking = linking_matrix(l);
    out.sigma = arith::signature(out.linking);
    if (l.kind == FramedLink::Kind::diagram) {
        const auto omega = omega_components(l.diagram);
        if (!omega.empty()) {
            const FramedLink flipped = from_diagram(reverse_component(l.diagram, omega.front()));
            if (signature(flipped) != out.sigma)
                throw InternalError("signature depends on component orientation");
        }
    }
    out.omega = omega_evaluation(ctx, l, opts);
    const Complex kappa = recoupling::omega_unknot(ctx, 1);
    out.value = arith::eta(ctx) * std::pow(kappa, -out.sigma) * out.omega.value;
    return out;
}

Complex writhe_normalized_invariant(const RootContext &ctx, const LinkDiagram &d, const SurgeryOptions &opts) {
    check(d);
    if (!omega_components(d).empty())
        throw DomainError("writhe normalisation needs an empty surgery link");
    if (!d.vertices.empty())
        throw DomainError("writhe normalisation applies to links, not graphs");
    if (d.components.empty())
        return arith::eta(ctx);
    const int c = *d.components.front().color;
    int offsets = 0;
    for (const auto &k : d.components) {
        if (*k.color != c)
            throw DomainError("writhe normalisation needs a single colour on every component");
        offsets += k.framing2;
    }
    const FramedLink l = from_diagram(d);
    const auto t = to_tl(d);
    const int w2 = 2 * t.writhe() + offsets;
    return omega_evaluation(ctx, l, opts).value * arith::eta(ctx) * tl::twist_factor(ctx, c, -w2).evaluate(ctx);
}

} // namespace shadowsum::surgery
