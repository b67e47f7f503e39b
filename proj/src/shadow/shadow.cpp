#include "shadowsum/shadow/shadow.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/recoupling/recoupling.hpp"
#include "shadowsum/tl/bracket.hpp"

namespace shadowsum::shadow {

using recoupling::ColorTriple;

namespace {

template <class T>
std::unordered_map<int, int> index_by_id(const std::vector<T> &xs, const char *what, Validation *v) {
    std::unordered_map<int, int> idx;
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
        if (!idx.emplace(xs[i].id, i).second && v)
            v->violations.push_back(std::string("duplicate ") + what + " id " + std::to_string(xs[i].id));
    return idx;
}

std::array<int, 3> sorted3(std::array<int, 3> a) {
    std::sort(a.begin(), a.end());
    return a;
}

// Resolved indices used by the enumerator and the evaluators.
struct Layout {
    std::unordered_map<int, int> region;
    std::vector<std::array<int, 3>> edge_slots;
    std::vector<std::array<int, 6>> vertex_slots;
    std::vector<int> boundary_edge_region;
    std::vector<std::array<int, 3>> boundary_vertex_edges;

    explicit Layout(const Shadow &s) {
        region = index_by_id(s.regions, "region", nullptr);
        auto reg = [&](int id) {
            auto it = region.find(id);
            if (it == region.end())
                throw ValidationError("unknown region id " + std::to_string(id));
            return it->second;
        };
        for (const auto &e : s.edges)
            edge_slots.push_back({reg(e.regions[0]), reg(e.regions[1]), reg(e.regions[2])});
        for (const auto &v : s.vertices) {
            std::array<int, 6> t;
            for (int k = 0; k < 6; ++k)
                t[k] = reg(v.tet[k]);
            vertex_slots.push_back(t);
        }
        for (const auto &b : s.boundary_edges)
            boundary_edge_region.push_back(reg(b.region));
        const auto bidx = index_by_id(s.boundary_edges, "boundary edge", nullptr);
        for (const auto &bv : s.boundary_vertices) {
            std::array<int, 3> t;
            for (int k = 0; k < 3; ++k) {
                auto it = bidx.find(bv.edges[k]);
                if (it == bidx.end())
                    throw ValidationError("unknown boundary edge id " + std::to_string(bv.edges[k]));
                t[k] = it->second;
            }
            boundary_vertex_edges.push_back(t);
        }
    }
};

} // namespace

Validation validate(const Shadow &s, const RootContext *ctx) {
    Validation v;
    const auto region = index_by_id(s.regions, "region", &v);
    index_by_id(s.edges, "edge", &v);
    index_by_id(s.vertices, "vertex", &v);
    const auto bedge = index_by_id(s.boundary_edges, "boundary edge", &v);
    index_by_id(s.boundary_vertices, "boundary vertex", &v);
    auto known = [&](int id, const std::string &where) {
        if (region.count(id))
            return true;
        v.violations.push_back(where + " references missing region " + std::to_string(id));
        return false;
    };

    for (const auto &r : s.regions) {
        const std::string where = "region " + std::to_string(r.id);
        if (r.external && !r.color)
            v.violations.push_back(where + " is external but has no colour");
        if (!r.external && r.color)
            v.violations.push_back(where + " has a fixed colour but is not external");
        if (r.color && *r.color < 0)
            v.violations.push_back(where + " has a negative colour");
        if (r.color && ctx && *r.color > ctx->r() - 2)
            v.violations.push_back(where + " has colour above r - 2");
    }

    bool any_signs = false, all_signs = true;
    for (const auto &e : s.edges) {
        const std::string where = "edge " + std::to_string(e.id);
        if (e.chi != 0 && e.chi != 1)
            v.violations.push_back(where + " has chi " + std::to_string(e.chi) + ", expected 0 or 1");
        for (int id : e.regions)
            known(id, where);
        any_signs = any_signs || e.signs.has_value();
        all_signs = all_signs && e.signs.has_value();
    }
    if (any_signs && !all_signs)
        v.warnings.push_back("incidence signs given on some edges only; homology unavailable");

    // Gleam parity: half-integer gleam iff an odd number of half twists in
    // the interval bundle over the region boundary.
    for (const auto &r : s.regions) {
        int twists = 0;
        bool complete = true;
        for (const auto &e : s.edges)
            for (int k = 0; k < 3; ++k)
                if (e.regions[k] == r.id) {
                    if (!e.nonorientable)
                        complete = false;
                    else if ((*e.nonorientable)[k])
                        ++twists;
                }
        const std::string where = "region " + std::to_string(r.id);
        if (!complete) {
            v.warnings.push_back(where + ": gleam parity not checked, bundle data missing");
            continue;
        }
        if ((r.gleam2 % 2 != 0) != (twists % 2 != 0))
            v.violations.push_back(where + " violates the gleam parity rule: gleam2 " + std::to_string(r.gleam2) +
                                   " with " + std::to_string(twists) + " non-orientable slots");
    }

    std::set<std::array<int, 3>> edge_triples;
    for (const auto &e : s.edges)
        edge_triples.insert(sorted3(e.regions));
    for (const auto &vx : s.vertices) {
        const std::string where = "vertex " + std::to_string(vx.id);
        bool ok = true;
        for (int id : vx.tet)
            ok = known(id, where) && ok;
        if (!ok)
            continue;
        for (const auto &f : recoupling::kTetFaces) {
            const std::array<int, 3> t{vx.tet[f[0]], vx.tet[f[1]], vx.tet[f[2]]};
            if (!edge_triples.count(sorted3(t)))
                v.violations.push_back(where + " has slot triple (" + std::to_string(t[0]) + "," +
                                       std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                       ") matching no edge");
        }
    }

    for (const auto &b : s.boundary_edges) {
        const std::string where = "boundary edge " + std::to_string(b.id);
        if (b.chi != 0 && b.chi != 1)
            v.violations.push_back(where + " has chi " + std::to_string(b.chi) + ", expected 0 or 1");
        if (b.color < 0)
            v.violations.push_back(where + " has a negative colour");
        if (!known(b.region, where))
            continue;
        const Region &r = s.regions[region.at(b.region)];
        if (!r.external)
            v.violations.push_back(where + " bounds region " + std::to_string(r.id) + ", which is not external");
        else if (r.color && *r.color != b.color)
            v.violations.push_back(where + " has colour " + std::to_string(b.color) + " but region " +
                                   std::to_string(r.id) + " has colour " + std::to_string(*r.color));
    }
    for (const auto &bv : s.boundary_vertices) {
        const std::string where = "boundary vertex " + std::to_string(bv.id);
        std::array<int, 3> colors{};
        bool ok = true;
        for (int k = 0; k < 3; ++k) {
            auto it = bedge.find(bv.edges[k]);
            if (it == bedge.end()) {
                v.violations.push_back(where + " references missing boundary edge " + std::to_string(bv.edges[k]));
                ok = false;
            } else {
                colors[k] = s.boundary_edges[it->second].color;
            }
        }
        if (!ok)
            continue;
        const ColorTriple t{colors[0], colors[1], colors[2]};
        if (!recoupling::is_admissible(t))
            v.violations.push_back(where + " has a non-admissible colour triple");
        else if (ctx && !recoupling::is_q_admissible(*ctx, t))
            v.violations.push_back(where + " has a colour triple that is not q-admissible");
    }
    return v;
}

void check(const Shadow &s, const RootContext *ctx) {
    const Validation v = validate(s, ctx);
    if (v.ok())
        return;
    std::ostringstream os;
    os << "invalid shadow: ";
    for (std::size_t i = 0; i < v.violations.size(); ++i)
        os << (i ? "; " : "") << v.violations[i];
    throw ValidationError(os.str());
}

int euler_characteristic(const Shadow &s) {
    int chi = static_cast<int>(s.vertices.size() + s.boundary_vertices.size());
    for (const auto &e : s.edges)
        chi -= e.chi;
    for (const auto &e : s.boundary_edges)
        chi -= e.chi;
    for (const auto &r : s.regions)
        chi += r.chi;
    return chi;
}

void for_each_coloring(const RootContext &ctx, const Shadow &s, const std::function<void(const Coloring &)> &visit,
                       std::optional<int> first_color) {
    const Layout layout(s);
    const int n = static_cast<int>(s.regions.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return s.regions[x].id < s.regions[y].id; });
    std::vector<int> step_of(n);
    for (int k = 0; k < n; ++k)
        step_of[order[k]] = k;

    // Constraints become checkable once their last region is coloured.
    std::vector<std::vector<std::array<int, 3>>> due(n);
    auto add_triple = [&](std::array<int, 3> t) {
        const int last = std::max({step_of[t[0]], step_of[t[1]], step_of[t[2]]});
        due[last].push_back(t);
    };
    for (const auto &t : layout.edge_slots)
        add_triple(t);
    for (const auto &t : layout.vertex_slots)
        for (const auto &f : recoupling::kTetFaces)
            add_triple({t[f[0]], t[f[1]], t[f[2]]});

    Coloring xi(n, 0);
    const int top = ctx.r() - 2;
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            visit(xi);
            return;
        }
        const Region &r = s.regions[order[k]];
        int lo = 0, hi = top;
        if (r.color)
            lo = hi = *r.color;
        if (k == 0 && first_color) {
            if (*first_color < lo || *first_color > hi)
                return;
            lo = hi = *first_color;
        }
        for (int c = lo; c <= hi; ++c) {
            xi[order[k]] = c;
            bool ok = c >= 0 && c <= top;
            for (const auto &t : due[k]) {
                if (!ok)
                    break;
                ok = recoupling::is_q_admissible(ctx, {xi[t[0]], xi[t[1]], xi[t[2]]});
            }
            if (ok)
                rec(k + 1);
        }
    };
    rec(0);
}

std::vector<Coloring> enumerate_colorings(const RootContext &ctx, const Shadow &s) {
    std::vector<Coloring> out;
    for_each_coloring(ctx, s, [&](const Coloring &xi) { out.push_back(xi); });
    return out;
}

arith::LaurentPoly phase_exact(const RootContext &ctx, const Region &region, int color, PhaseSign sign) {
    return tl::twist_factor(ctx, color, sign == PhaseSign::minus ? -region.gleam2 : region.gleam2);
}

Complex phase(const RootContext &ctx, const Region &region, int color, PhaseSign sign) {
    return phase_exact(ctx, region, color, sign).evaluate(ctx);
}

namespace {

template <class Ops>
typename Ops::Scalar term(const RootContext &ctx, const Shadow &s, const Layout &layout, const Coloring &xi,
                          PhaseSign sign, const Ops &ops) {
    using Scalar = typename Ops::Scalar;
    Scalar num = ops.one(), den = ops.one();
    for (std::size_t i = 0; i < s.regions.size(); ++i) {
        const Region &r = s.regions[i];
        ops.mul_pow(num, den, ops.delta(xi[i]), r.chi);
        num = num * ops.poly(phase_exact(ctx, r, xi[i], sign));
    }
    for (const auto &t : layout.vertex_slots)
        num = num * ops.tet({xi[t[0]], xi[t[1]], xi[t[2]], xi[t[3]], xi[t[4]], xi[t[5]]});
    for (const auto &t : layout.boundary_vertex_edges)
        num = num * ops.theta({s.boundary_edges[t[0]].color, s.boundary_edges[t[1]].color,
                               s.boundary_edges[t[2]].color});
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        const auto &t = layout.edge_slots[i];
        ops.mul_pow(num, den, ops.theta({xi[t[0]], xi[t[1]], xi[t[2]]}), -s.edges[i].chi);
    }
    for (const auto &b : s.boundary_edges)
        ops.mul_pow(num, den, ops.delta(b.color), -b.chi);
    return ops.divide(num, den);
}

struct NumericOps {
    using Scalar = Complex;
    const RootContext &ctx;
    Scalar one() const { return 1.0; }
    Scalar delta(int n) const { return recoupling::delta_value(ctx, n); }
    Scalar theta(ColorTriple t) const { return recoupling::theta_value(ctx, t); }
    Scalar tet(const recoupling::TetLabels &l) const { return recoupling::tet_value(ctx, l); }
    Scalar poly(const arith::LaurentPoly &p) const { return p.evaluate(ctx); }
    void mul_pow(Scalar &num, Scalar &den, Scalar x, int e) const {
        for (; e > 0; --e)
            num *= x;
        for (; e < 0; ++e)
            den *= x;
    }
    Scalar divide(Scalar num, Scalar den) const {
        if (den == Complex(0.0))
            throw InternalError("state sum term divides by zero");
        return num / den;
    }
};

struct ExactOps {
    using Scalar = Fraction;
    const RootContext &ctx;
    Scalar one() const { return Fraction(1); }
    Scalar delta(int n) const { return recoupling::delta(ctx, n); }
    Scalar theta(ColorTriple t) const { return recoupling::theta(ctx, t); }
    Scalar tet(const recoupling::TetLabels &l) const { return recoupling::tet(ctx, l); }
    Scalar poly(const arith::LaurentPoly &p) const { return Fraction(p); }
    void mul_pow(Scalar &num, Scalar &den, const Scalar &x, int e) const {
        for (; e > 0; --e)
            num *= x;
        for (; e < 0; ++e)
            den *= x;
    }
    Scalar divide(const Scalar &num, const Scalar &den) const {
        if (den.vanishes_at(ctx))
            throw InternalError("state sum term divides by zero");
        return num / den;
    }
};

} // namespace

Complex state_sum_term(const RootContext &ctx, const Shadow &s, const Coloring &xi, PhaseSign sign) {
    const Layout layout(s);
    return term(ctx, s, layout, xi, sign, NumericOps{ctx});
}

Fraction state_sum_term_exact(const RootContext &ctx, const Shadow &s, const Coloring &xi, PhaseSign sign) {
    const Layout layout(s);
    return term(ctx, s, layout, xi, sign, ExactOps{ctx});
}

StateSum state_sum(const RootContext &ctx, const Shadow &s, const StateSumOptions &opts) {
    check(s, &ctx);
    const Layout layout(s);
    if (s.regions.empty())
        return {term(ctx, s, layout, {}, opts.phase_sign, NumericOps{ctx}), 1};

    const Region &first = *std::min_element(s.regions.begin(), s.regions.end(),
                                            [](const Region &x, const Region &y) { return x.id < y.id; });
    std::vector<int> parts;
    if (first.color)
        parts.push_back(*first.color);
    else
        for (int c = 0; c <= ctx.r() - 2; ++c)
            parts.push_back(c);

    std::vector<StateSum> partial(parts.size(), StateSum{0.0, 0});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t p; (p = next.fetch_add(1)) < parts.size();) {
            StateSum acc{0.0, 0};
            for_each_coloring(
                ctx, s,
                [&](const Coloring &xi) {
                    acc.value += term(ctx, s, layout, xi, opts.phase_sign, NumericOps{ctx});
                    ++acc.colorings;
                },
                parts[p]);
            partial[p] = acc;
        }
    };
    const int jobs = std::clamp(opts.jobs, 1, static_cast<int>(parts.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    StateSum total{0.0, 0};
    for (const auto &p : partial) {
        total.value += p.value;
        total.colorings += p.colorings;
    }
    return total;
}

ShadowInvariant invariant_from_shadow(const RootContext &ctx, const Shadow &s, std::optional<int> sigma,
                                      const StateSumOptions &opts) {
    ShadowInvariant out;
    if (sigma)
        out.sigma = *sigma;
    else if (s.sigma)
        out.sigma = *s.sigma;
    else if (has_homology_data(s))
        out.sigma = signature(s);
    else
        throw ValidationError("sigma is not given and the shadow has no homology data to compute it");
    out.chi = euler_characteristic(s);
    out.sum = state_sum(ctx, s, opts);
    const Complex kappa = recoupling::omega_unknot(ctx, 1);
    out.value = std::pow(kappa, -out.sigma) * std::pow(arith::eta(ctx), out.chi) * out.sum.value;
    return out;
}

bool has_homology_data(const Shadow &s) {
    for (const auto &r : s.regions)
        if (!r.orientable || !*r.orientable)
            return false;
    for (const auto &e : s.edges)
        if (!e.signs)
            return false;
    return true;
}

std::vector<Cycle> homology_h2(const Shadow &s) {
    if (!has_homology_data(s))
        throw ValidationError("homology needs every region declared orientable and signs on every edge");
    check(s);
    const Layout layout(s);
    const int n = static_cast<int>(s.regions.size());
    std::vector<std::vector<long long>> m;
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        std::vector<long long> row(n, 0);
        for (int k = 0; k < 3; ++k)
            row[layout.edge_slots[i][k]] += (*s.edges[i].signs)[k];
        m.push_back(row);
    }
    for (int r : layout.boundary_edge_region) {
        std::vector<long long> row(n, 0);
        row[r] = 1;
        m.push_back(row);
    }

    // Unimodular column operations bring m to echelon form; the matching
    // columns of u then span the kernel.
    std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        u[i][i] = 1;
    auto col_op = [&](int dst, int src, long long f) {
        for (auto &row : m)
            row[dst] -= f * row[src];
        for (auto &row : u)
            row[dst] -= f * row[src];
    };
    auto col_swap = [&](int a, int b) {
        for (auto &row : m)
            std::swap(row[a], row[b]);
        for (auto &row : u)
            std::swap(row[a], row[b]);
    };
    int col = 0;
    for (auto &row : m) {
        if (col == n)
            break;
        while (true) {
            int best = -1;
            for (int j = col; j < n; ++j)
                if (row[j] != 0 && (best < 0 || std::llabs(row[j]) < std::llabs(row[best])))
                    best = j;
            if (best < 0)
                break;
            col_swap(col, best);
            bool done = true;
            for (int j = col + 1; j < n; ++j)
                if (row[j] != 0) {
                    col_op(j, col, row[j] / row[col]);
                    done = done && row[j] == 0;
                }
            if (done) {
                ++col;
                break;
            }
        }
    }
    std::vector<Cycle> basis;
    for (int j = col; j < n; ++j) {
        Cycle h(n);
        for (int i = 0; i < n; ++i)
            h[i] = u[i][j];
        basis.push_back(h);
    }
    return basis;
}

arith::Rational bilinear_form(const Shadow &s, const Cycle &h1, const Cycle &h2) {
    if (h1.size() != s.regions.size() || h2.size() != s.regions.size())
        throw DomainError("cycle length does not match the number of regions");
    long long sum = 0;
    for (std::size_t i = 0; i < s.regions.size(); ++i)
        sum += h1[i] * h2[i] * s.regions[i].gleam2;
    return arith::Rational(sum, 2);
}

arith::RationalMatrix gram_matrix(const Shadow &s, const std::vector<Cycle> &basis) {
    arith::RationalMatrix g(basis.size(), std::vector<arith::Rational>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            g[i][j] = bilinear_form(s, basis[i], basis[j]);
    return g;
}

int signature(const Shadow &s) { return arith::signature(gram_matrix(s, homology_h2(s))); }

} // namespace shadowsum::shadow
