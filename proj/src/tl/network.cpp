#include "shadowsum/tl/network.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/tl/temperley_lieb.hpp"

namespace shadowsum::tl {

int Network::node_of_port(int p) const {
    auto it = std::upper_bound(port_offset.begin(), port_offset.end(), p);
    return static_cast<int>(it - port_offset.begin()) - 1;
}

namespace {

std::shared_ptr<const NodeTerms> crossing_terms(bool mirror) {
    static const auto make = [](bool m) {
        auto t = std::make_shared<NodeTerms>();
        // Ports S, E, N, W. The A-smoothing joins S-E and N-W.
        t->pairings = {{1, 0, 3, 2}, {3, 2, 1, 0}};
        const Fraction a(arith::a_power(1)), ainv(arith::a_power(-1));
        t->coeffs = m ? std::vector<Fraction>{ainv, a} : std::vector<Fraction>{a, ainv};
        return std::shared_ptr<const NodeTerms>(t);
    };
    static const auto plain = make(false), mirrored = make(true);
    return mirror ? mirrored : plain;
}

std::shared_ptr<const NodeTerms> projector_terms(int c) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const NodeTerms>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(c); it != cache.end())
            return it->second;
    }
    const TLElement &f = jones_wenzl_generic(c);
    auto t = std::make_shared<NodeTerms>();
    for (const auto &[k, coeff] : f.terms()) {
        t->pairings.push_back(k);
        t->coeffs.push_back(coeff);
    }
    std::lock_guard lock(mu);
    return cache.try_emplace(c, std::move(t)).first->second;
}

} // namespace

Network cable(const FramedGraphDiagram &d, const NetworkOptions &opts) {
    d.check();
    Network net;
    const int na = static_cast<int>(d.arcs.size());
    auto color = [&](int arc) { return d.arcs[arc].color; };

    auto add_node = [&](int degree, std::shared_ptr<const NodeTerms> terms) {
        net.nodes.push_back(NetworkNode{degree, std::move(terms)});
        net.port_offset.push_back(net.port_count());
        net.wire.resize(net.wire.size() + degree, -1);
        return static_cast<int>(net.nodes.size()) - 1;
    };
    auto port = [&](int node, int k) { return net.port_offset[node] + k; };

    for (int a = 0; a < na; ++a)
        if (color(a) > opts.budget.max_strands)
            throw BudgetExceeded("colour " + std::to_string(color(a)) + " exceeds the strand budget of " +
                                 std::to_string(opts.budget.max_strands));
    for (const auto &x : d.crossings)
        net.elementary_crossings += color(x.ends[0].arc) * color(x.ends[1].arc);
    if (net.elementary_crossings > opts.budget.max_crossings)
        throw BudgetExceeded("diagram expands to " + std::to_string(net.elementary_crossings) +
                             " crossings, budget is " + std::to_string(opts.budget.max_crossings));

    // Grid nodes for each crossing.
    std::vector<int> grid_base(d.crossings.size(), -1);
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        const int cu = color(d.crossings[c].ends[0].arc), co = color(d.crossings[c].ends[1].arc);
        for (int i = 0; i < cu * co; ++i) {
            const int n = add_node(4, crossing_terms(opts.mirror));
            if (i == 0)
                grid_base[c] = n;
        }
    }
    // One projector per chain of colour >= 2, placed on its first arc.
    std::vector<int> projector_on(na, -1);
    for (const auto &chain : d.chains()) {
        const int c = color(chain.arcs.front());
        if (c < 2)
            continue;
        projector_on[chain.arcs.front()] = add_node(2 * c, projector_terms(c));
        net.largest_projector = std::max(net.largest_projector, c);
    }

    // Abstract points: node ports first, then arc end strands.
    const int node_ports = net.port_count();
    std::vector<int> end_base(2 * na, 0);
    int total = node_ports;
    for (int a = 0; a < na; ++a)
        for (int s = 0; s < 2; ++s) {
            end_base[2 * a + s] = total;
            if (!d.arcs[a].closed)
                total += color(a);
        }
    std::vector<std::array<int, 2>> adj(total, {-1, -1});
    auto link = [&](int p, int q) {
        for (int x : {p, q}) {
            auto &slots = adj[x];
            if (slots[0] < 0)
                slots[0] = x == p ? q : p;
            else if (slots[1] < 0)
                slots[1] = x == p ? q : p;
            else
                throw InternalError("point linked more than twice while cabling");
        }
    };
    auto ep = [&](ArcEnd e, int t) { return end_base[2 * e.arc + e.side] + t; };

    for (int a = 0; a < na; ++a) {
        const int c = color(a);
        if (c == 0)
            continue;
        const int p = projector_on[a];
        if (d.arcs[a].closed) {
            if (p >= 0)
                for (int pos = 0; pos < c; ++pos)
                    link(port(p, 2 * c - 1 - pos), port(p, pos));
            else
                net.free_loops += 1;
            continue;
        }
        for (int t = 0; t < c; ++t) {
            if (p >= 0) {
                link(ep({a, 0}, t), port(p, c - 1 - t));
                link(ep({a, 1}, t), port(p, 2 * c - 1 - t));
            } else {
                link(ep({a, 0}, t), ep({a, 1}, c - 1 - t));
            }
        }
    }
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        const auto &e = d.crossings[c].ends;
        const int cu = color(e[0].arc), co = color(e[1].arc);
        if (cu == 0 || co == 0) {
            for (int i = 0; i < cu; ++i)
                link(ep(e[0], i), ep(e[2], cu - 1 - i));
            for (int j = 0; j < co; ++j)
                link(ep(e[1], j), ep(e[3], co - 1 - j));
            continue;
        }
        auto g = [&](int x, int y, int k) { return port(grid_base[c] + y * cu + x, k); };
        enum { S = 0, E = 1, N = 2, W = 3 };
        for (int x = 0; x < cu; ++x) {
            link(ep(e[0], x), g(x, 0, S));
            link(ep(e[2], x), g(cu - 1 - x, co - 1, N));
        }
        for (int y = 0; y < co; ++y) {
            link(ep(e[1], y), g(cu - 1, y, E));
            link(ep(e[3], y), g(0, co - 1 - y, W));
        }
        for (int x = 0; x < cu; ++x)
            for (int y = 0; y < co; ++y) {
                if (y + 1 < co)
                    link(g(x, y, N), g(x, y + 1, S));
                if (x + 1 < cu)
                    link(g(x, y, E), g(x + 1, y, W));
            }
    }
    for (const auto &v : d.vertices) {
        const int c1 = color(v.ends[0].arc), c2 = color(v.ends[1].arc), c3 = color(v.ends[2].arc);
        const int k12 = (c1 + c2 - c3) / 2, k23 = (c2 + c3 - c1) / 2, k31 = (c3 + c1 - c2) / 2;
        for (int t = 0; t < k12; ++t)
            link(ep(v.ends[0], c1 - 1 - t), ep(v.ends[1], t));
        for (int t = 0; t < k23; ++t)
            link(ep(v.ends[1], c2 - 1 - t), ep(v.ends[2], t));
        for (int t = 0; t < k31; ++t)
            link(ep(v.ends[2], c3 - 1 - t), ep(v.ends[0], t));
    }

    // Follow chains of arc-end points between node ports.
    std::vector<char> seen(total, 0);
    for (int p = 0; p < node_ports; ++p) {
        if (seen[p])
            continue;
        if (adj[p][0] < 0 || adj[p][1] >= 0)
            throw InternalError("node port with wrong number of links");
        int prev = p, cur = adj[p][0];
        seen[p] = 1;
        while (cur >= node_ports) {
            seen[cur] = 1;
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        seen[cur] = 1;
        net.wire[p] = cur;
        net.wire[cur] = p;
    }
    for (int p = node_ports; p < total; ++p) {
        if (seen[p])
            continue;
        ++net.free_loops;
        int prev = -1, cur = p;
        while (!seen[cur]) {
            seen[cur] = 1;
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
    }
    return net;
}

namespace {

constexpr int kMaxFrontier = 250;

struct ExactOps {
    using Scalar = Fraction;
    Scalar convert(const Fraction &f) const { return f; }
    Scalar delta_pow(int k) const { return loop_power(k); }
    static bool is_zero(const Scalar &s) { return s.is_zero(); }
};

struct NumericOps {
    using Scalar = Complex;
    const RootContext &ctx;
    Complex delta;
    explicit NumericOps(const RootContext &c)
        : ctx(c), delta(arith::quantum_loop(c).evaluate(c)) {}
    Scalar convert(const Fraction &f) const { return f.evaluate(ctx); }
    Scalar delta_pow(int k) const { return std::pow(delta, k); }
    static bool is_zero(const Scalar &s) { return s == Complex(0.0, 0.0); }
};

std::vector<int> contraction_order(const Network &net) {
    // Greedy: among nodes touching the processed part, take the one whose
    // addition grows the frontier least.
    const int n = static_cast<int>(net.nodes.size());
    std::vector<char> done(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_growth = 0, best_closed = -1;
        for (int v = 0; v < n; ++v) {
            if (done[v])
                continue;
            int closed = 0, opened = 0;
            for (int k = 0; k < net.nodes[v].degree; ++k) {
                const int u = net.node_of_port(net.wire[net.port_offset[v] + k]);
                if (u == v)
                    continue;
                (done[u] ? closed : opened) += 1;
            }
            const int growth = opened - closed;
            bool better;
            if (best < 0)
                better = true;
            else if ((closed > 0) != (best_closed > 0))
                better = closed > 0;
            else
                better = growth < best_growth || (growth == best_growth && closed > best_closed);
            if (better) {
                best = v;
                best_growth = growth;
                best_closed = closed;
            }
        }
        done[best] = 1;
        order.push_back(best);
    }
    return order;
}

template <class Ops>
typename Ops::Scalar contract(const Network &net, const Ops &ops) {
    using S = typename Ops::Scalar;
    const int nports = net.port_count();
    std::vector<int> frontier;                 // unprocessed-end port of each open wire
    std::vector<int> frontier_pos(nports, -1); // index of a port in the frontier
    std::unordered_map<std::string, S> states;
    states.emplace(std::string(), S(1));
    std::vector<char> processed(net.nodes.size(), 0);

    for (int v : contraction_order(net)) {
        const NetworkNode &node = net.nodes[v];
        const int deg = node.degree, base = net.port_offset[v];
        const int F = static_cast<int>(frontier.size());
        std::vector<int> attach(deg, -1), self(deg, -1), out_index(deg, -1);
        std::vector<int> port_of_old(F, -1), old_to_new(F, -1);
        for (int k = 0; k < deg; ++k) {
            const int p = base + k, q = net.wire[p];
            const int u = net.node_of_port(q);
            if (u == v)
                self[k] = q - base;
            else if (processed[u]) {
                attach[k] = frontier_pos[p];
                port_of_old[frontier_pos[p]] = k;
            }
        }
        std::vector<int> next_frontier;
        for (int f = 0; f < F; ++f)
            if (port_of_old[f] < 0) {
                old_to_new[f] = static_cast<int>(next_frontier.size());
                next_frontier.push_back(frontier[f]);
            }
        for (int k = 0; k < deg; ++k)
            if (attach[k] < 0 && self[k] < 0) {
                out_index[k] = static_cast<int>(next_frontier.size());
                next_frontier.push_back(net.wire[base + k]);
            }
        const int NF = static_cast<int>(next_frontier.size());
        if (NF > kMaxFrontier)
            throw BudgetExceeded("contraction frontier exceeds " + std::to_string(kMaxFrontier) + " wires");

        const auto &terms = *node.terms;
        std::vector<S> coeffs;
        coeffs.reserve(terms.coeffs.size());
        for (const auto &c : terms.coeffs)
            coeffs.push_back(ops.convert(c));
        std::vector<S> delta_cache;

        std::unordered_map<std::string, S> next;
        next.reserve(states.size() * 2);
        std::string key(NF, '\0');
        std::vector<char> port_seen(deg);
        for (const auto &[state, coeff] : states) {
            for (std::size_t t = 0; t < terms.pairings.size(); ++t) {
                const auto &T = terms.pairings[t];
                std::fill(port_seen.begin(), port_seen.end(), 0);
                // Leaves the node through port j; returns the next port to
                // enter, or -(new frontier index) - 1 at an endpoint.
                auto leave = [&](int j) -> int {
                    while (true) {
                        if (out_index[j] >= 0)
                            return -out_index[j] - 1;
                        if (self[j] >= 0)
                            return self[j];
                        const int other = static_cast<unsigned char>(state[attach[j]]);
                        if (port_of_old[other] < 0)
                            return -old_to_new[other] - 1;
                        return port_of_old[other];
                    }
                };
                auto walk_from_port = [&](int k) -> int {
                    while (true) {
                        port_seen[k] = 1;
                        const int j = T[k];
                        port_seen[j] = 1;
                        const int r = leave(j);
                        if (r < 0)
                            return -r - 1;
                        k = r;
                    }
                };
                for (int f = 0; f < F; ++f) {
                    if (old_to_new[f] < 0)
                        continue;
                    const int other = static_cast<unsigned char>(state[f]);
                    int end;
                    if (port_of_old[other] < 0)
                        end = old_to_new[other];
                    else
                        end = walk_from_port(port_of_old[other]);
                    key[old_to_new[f]] = static_cast<char>(end);
                }
                for (int k = 0; k < deg; ++k) {
                    if (out_index[k] < 0)
                        continue;
                    key[out_index[k]] = static_cast<char>(walk_from_port(k));
                }
                int loops = 0;
                for (int k = 0; k < deg; ++k) {
                    if (port_seen[k])
                        continue;
                    ++loops;
                    const int start = k;
                    int cur = k;
                    do {
                        port_seen[cur] = 1;
                        const int j = T[cur];
                        port_seen[j] = 1;
                        cur = leave(j);
                    } while (cur != start && cur >= 0);
                }
                if (static_cast<int>(delta_cache.size()) <= loops)
                    for (int l = static_cast<int>(delta_cache.size()); l <= loops; ++l)
                        delta_cache.push_back(ops.delta_pow(l));
                S value = coeff * coeffs[t];
                if (loops)
                    value = value * delta_cache[loops];
                auto [it, inserted] = next.try_emplace(key, value);
                if (!inserted)
                    it->second += value;
            }
        }
        states.clear();
        for (auto &[k, c] : next)
            if (!Ops::is_zero(c))
                states.emplace(k, std::move(c));
        for (int f = 0; f < F; ++f)
            frontier_pos[frontier[f]] = -1;
        frontier = std::move(next_frontier);
        for (int f = 0; f < NF; ++f)
            frontier_pos[frontier[f]] = f;
        processed[v] = 1;
        if (states.empty())
            return S(0);
    }
    auto it = states.find(std::string());
    if (it == states.end())
        return S(0);
    S result = it->second;
    if (net.free_loops)
        result = result * ops.delta_pow(net.free_loops);
    return result;
}

} // namespace

Fraction contract_exact(const Network &net) { return contract(net, ExactOps{}); }

Complex contract_numeric(const Network &net, const RootContext &ctx) {
    return contract(net, NumericOps(ctx));
}

} // namespace shadowsum::tl
