#include "shadowsum/checks/random_shadow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "recorder.hpp"
#include "shadowsum/recoupling/recoupling.hpp"

namespace shadowsum::checks {

using shadow::Coloring;
using shadow::Shadow;

namespace {

int uniform(std::mt19937_64 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> distinct_ids(std::mt19937_64 &rng, int n) {
    std::vector<int> ids(40);
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(n);
    return ids;
}

} // namespace

Shadow random_shadow(std::mt19937_64 &rng, int r, int max_regions) {
    Shadow s;
    const int n = uniform(rng, 1, max_regions);
    const auto rid = distinct_ids(rng, n);
    for (int i = 0; i < n; ++i) {
        shadow::Region reg{.id = rid[i], .gleam2 = uniform(rng, -4, 4), .chi = uniform(rng, -2, 2)};
        if (uniform(rng, 0, 3) == 0) {
            reg.external = true;
            reg.color = uniform(rng, 0, r - 2);
        }
        s.regions.push_back(reg);
    }
    auto pick = [&] { return rid[uniform(rng, 0, n - 1)]; };

    const int nv = uniform(rng, 0, 2);
    const auto vid = distinct_ids(rng, nv);
    std::vector<std::array<int, 3>> triples;
    for (int v = 0; v < nv; ++v) {
        shadow::InternalVertex vx{.id = vid[v]};
        for (int &x : vx.tet)
            x = pick();
        s.vertices.push_back(vx);
        for (const auto &f : recoupling::kTetFaces)
            triples.push_back({vx.tet[f[0]], vx.tet[f[1]], vx.tet[f[2]]});
    }
    const int extra = uniform(rng, 0, 2);
    for (int e = 0; e < extra; ++e)
        triples.push_back({pick(), pick(), pick()});
    const auto eid = distinct_ids(rng, static_cast<int>(triples.size()));
    for (std::size_t e = 0; e < triples.size(); ++e) {
        auto t = triples[e];
        std::shuffle(t.begin(), t.end(), rng);
        s.edges.push_back({.id = eid[e], .chi = uniform(rng, 0, 1), .regions = t});
    }

    // Gleam parity holds vacuously on regions meeting no edge.
    for (auto &reg : s.regions) {
        bool incident = false;
        for (const auto &e : s.edges)
            for (int x : e.regions)
                incident = incident || x == reg.id;
        if (!incident)
            reg.gleam2 &= ~1;
    }

    std::vector<int> bids;
    int next = 1;
    for (const auto &reg : s.regions)
        if (reg.external) {
            s.boundary_edges.push_back({.id = next, .chi = uniform(rng, 0, 1), .region = reg.id, .color = *reg.color});
            bids.push_back(next++);
        }
    if (!bids.empty()) {
        const arith::RootContext ctx(r);
        for (int tries = 0, made = 0; tries < 4 && made < 2; ++tries) {
            std::array<int, 3> t{bids[uniform(rng, 0, (int)bids.size() - 1)],
                                 bids[uniform(rng, 0, (int)bids.size() - 1)],
                                 bids[uniform(rng, 0, (int)bids.size() - 1)]};
            auto color = [&](int id) { return s.boundary_edges[id - 1].color; };
            if (recoupling::is_q_admissible(ctx, {color(t[0]), color(t[1]), color(t[2])}))
                s.boundary_vertices.push_back({.id = ++made, .edges = t});
        }
    }
    return s;
}

std::vector<Coloring> naive_colorings(const RootContext &ctx, const Shadow &s) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < s.regions.size(); ++i)
        pos[s.regions[i].id] = static_cast<int>(i);
    const int n = static_cast<int>(s.regions.size());
    const int colors = ctx.r() - 1;
    std::vector<Coloring> out;
    Coloring xi(n, 0);
    long long total = 1;
    for (int i = 0; i < n; ++i)
        total *= colors;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = n - 1; i >= 0; --i) {
            xi[i] = static_cast<int>(c % colors);
            c /= colors;
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (s.regions[i].color && *s.regions[i].color != xi[i])
                ok = false;
        for (const auto &e : s.edges) {
            if (!ok)
                break;
            ok = recoupling::is_q_admissible(
                ctx, {xi[pos[e.regions[0]]], xi[pos[e.regions[1]]], xi[pos[e.regions[2]]]});
        }
        if (ok)
            out.push_back(xi);
    }
    // Backtracking visits colourings in region-id order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return s.regions[a].id < s.regions[b].id; });
    std::sort(out.begin(), out.end(), [&](const Coloring &x, const Coloring &y) {
        for (int i : order)
            if (x[i] != y[i])
                return x[i] < y[i];
        return false;
    });
    return out;
}

Shadow permute_ids(std::mt19937_64 &rng, const Shadow &s, std::vector<int> &perm) {
    auto relabel = [&](auto &xs) {
        const auto ids = distinct_ids(rng, static_cast<int>(xs.size()));
        std::map<int, int> m;
        for (std::size_t i = 0; i < xs.size(); ++i)
            m[xs[i].id] = ids[i];
        for (std::size_t i = 0; i < xs.size(); ++i)
            xs[i].id = ids[i];
        return m;
    };
    Shadow t = s;
    const auto reg = relabel(t.regions);
    relabel(t.edges);
    relabel(t.vertices);
    const auto bedge = relabel(t.boundary_edges);
    relabel(t.boundary_vertices);
    for (auto &e : t.edges)
        for (int &x : e.regions)
            x = reg.at(x);
    for (auto &v : t.vertices)
        for (int &x : v.tet)
            x = reg.at(x);
    for (auto &b : t.boundary_edges)
        b.region = reg.at(b.region);
    for (auto &bv : t.boundary_vertices)
        for (int &x : bv.edges)
            x = bedge.at(x);

    std::vector<int> order(t.regions.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<shadow::Region> regions;
    perm.assign(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        regions.push_back(t.regions[order[i]]);
        perm[order[i]] = static_cast<int>(i);
    }
    t.regions = std::move(regions);
    std::shuffle(t.edges.begin(), t.edges.end(), rng);
    std::shuffle(t.vertices.begin(), t.vertices.end(), rng);
    for (auto &e : t.edges) {
        std::array<int, 3> p{0, 1, 2};
        std::shuffle(p.begin(), p.end(), rng);
        e.regions = {e.regions[p[0]], e.regions[p[1]], e.regions[p[2]]};
    }
    return t;
}

Shadow permute_tet_slots(std::mt19937_64 &rng, const Shadow &s) {
    const auto &perms = recoupling::tet_slot_permutations();
    Shadow t = s;
    for (auto &v : t.vertices) {
        const auto &p = perms[uniform(rng, 0, static_cast<int>(perms.size()) - 1)];
        std::array<int, 6> tet;
        for (int k = 0; k < 6; ++k)
            tet[k] = v.tet[p[k]];
        v.tet = tet;
    }
    return t;
}

CheckResult check_shadow_properties(int cases, std::uint64_t seed, int max_r) {
    Recorder rec("shadow properties", "well-definedness of the state sum");
    std::mt19937_64 rng(seed);
    for (int c = 0; c < cases; ++c) {
        const int r = uniform(rng, 3, max_r);
        const RootContext ctx(r);
        const Shadow s = random_shadow(rng, r);
        auto describe = [&] {
            std::ostringstream os;
            os << "case " << c << " r=" << r;
            return os.str();
        };
        rec.guarded(
            [&] {
                shadow::check(s, &ctx);
                const auto got = shadow::enumerate_colorings(ctx, s);
                rec.expect(got == naive_colorings(ctx, s), [&] { return describe() + ": enumeration"; });

                std::vector<int> perm;
                const Shadow p = permute_ids(rng, s, perm);
                const Shadow q = permute_tet_slots(rng, s);
                bool same = true;
                for (const auto &xi : got) {
                    Coloring yi(xi.size());
                    for (std::size_t i = 0; i < xi.size(); ++i)
                        yi[perm[i]] = xi[i];
                    const auto base = shadow::state_sum_term_exact(ctx, s, xi);
                    same = same && base == shadow::state_sum_term_exact(ctx, p, yi) &&
                           base == shadow::state_sum_term_exact(ctx, q, xi);
                }
                rec.expect(same, [&] { return describe() + ": terms differ under relabeling"; });
                rec.expect(shadow::enumerate_colorings(ctx, p).size() == got.size(),
                           [&] { return describe() + ": colouring count under relabeling"; });
            },
            describe);
    }
    return rec.done();
}

} // namespace shadowsum::checks
