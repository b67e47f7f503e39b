#include "shadowsum/recoupling/recoupling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/tl/bracket.hpp"
#include "shadowsum/tl/builder.hpp"
#include "shadowsum/tl/temperley_lieb.hpp"

namespace shadowsum::recoupling {

namespace {

template <class Key, class Value>
class Memo {
public:
    template <class F>
    Value get(const Key &key, F compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end())
                return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return map_.emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value> map_;
};

const Fraction &qfact(int n) {
    static std::vector<Fraction> table;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        if (n < static_cast<int>(table.size()))
            return table[n];
    }
    std::unique_lock lock(mutex);
    if (table.empty()) {
        // Fixed capacity keeps references handed out earlier valid.
        table.reserve(256);
        table.emplace_back(1);
    }
    if (n >= 256)
        throw DomainError("quantum factorial argument too large");
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        table.push_back(table.back() * Fraction::quantum_integer(m));
    }
    return table[n];
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

tl::BracketOptions oracle_options() { return {{1 << 20, 14}, false}; }

void check_color(const RootContext &ctx, int n) {
    if (n < 0 || n > ctx.r() - 1)
        throw DomainError("colour " + std::to_string(n) + " outside 0.." + std::to_string(ctx.r() - 1));
}

} // namespace

bool is_admissible(const ColorTriple &t) {
    return t.a >= 0 && t.b >= 0 && t.c >= 0 && t.a <= t.b + t.c && t.b <= t.a + t.c && t.c <= t.a + t.b &&
           (t.a + t.b + t.c) % 2 == 0;
}

bool is_q_admissible(const RootContext &ctx, const ColorTriple &t) {
    return is_admissible(t) && t.a + t.b + t.c <= 2 * (ctx.r() - 2);
}

bool is_q_admissible_tet(const RootContext &ctx, const TetLabels &l) {
    for (const auto &f : kTetFaces)
        if (!is_q_admissible(ctx, {l[f[0]], l[f[1]], l[f[2]]}))
            return false;
    return true;
}

Fraction delta_generic(int n) {
    if (n < 0)
        throw DomainError("negative colour");
    const Fraction q = Fraction::quantum_integer(n + 1);
    return n % 2 ? -q : q;
}

Fraction theta_generic(const ColorTriple &t) {
    if (!is_admissible(t))
        throw DomainError("theta of a non-admissible triple");
    static Memo<std::array<int, 3>, Fraction> memo;
    std::array<int, 3> key{t.a, t.b, t.c};
    std::sort(key.begin(), key.end());
    return memo.get(key, [&] {
        // a = m + p, b = m + n, c = n + p.
        const int m = (t.a + t.b - t.c) / 2, n = (t.b + t.c - t.a) / 2, p = (t.a + t.c - t.b) / 2;
        Fraction num = qfact(m + n + p + 1) * qfact(m) * qfact(n) * qfact(p);
        Fraction den = qfact(m + n) * qfact(n + p) * qfact(m + p);
        return Fraction(sign_pow(m + n + p)) * num / den;
    });
}

Fraction tet_generic(const TetLabels &l) {
    for (const auto &f : kTetFaces)
        if (!is_admissible({l[f[0]], l[f[1]], l[f[2]]}))
            throw DomainError("tetrahedron with a non-admissible vertex");
    static Memo<TetLabels, Fraction> memo;
    return memo.get(l, [&] {
        std::array<int, 4> lo;
        for (int i = 0; i < 4; ++i)
            lo[i] = (l[kTetFaces[i][0]] + l[kTetFaces[i][1]] + l[kTetFaces[i][2]]) / 2;
        const std::array<int, 3> hi{(l[kA] + l[kD] + l[kB] + l[kE]) / 2, (l[kA] + l[kD] + l[kC] + l[kF]) / 2,
                                    (l[kB] + l[kE] + l[kC] + l[kF]) / 2};
        Fraction prefactor(1);
        for (int x : lo)
            for (int y : hi)
                prefactor *= qfact(y - x);
        for (int x : l)
            prefactor /= qfact(x);
        Fraction sum;
        const int smin = *std::max_element(lo.begin(), lo.end()), smax = *std::min_element(hi.begin(), hi.end());
        for (int s = smin; s <= smax; ++s) {
            Fraction den(1);
            for (int x : lo)
                den *= qfact(s - x);
            for (int y : hi)
                den *= qfact(y - s);
            sum += Fraction(sign_pow(s)) * qfact(s + 1) / den;
        }
        return prefactor * sum;
    });
}

Fraction delta(const RootContext &ctx, int n) {
    check_color(ctx, n);
    return delta_generic(n);
}

Fraction theta(const RootContext &ctx, const ColorTriple &t) {
    if (!is_q_admissible(ctx, t))
        return Fraction();
    return theta_generic(t);
}

Fraction tet(const RootContext &ctx, const TetLabels &l) {
    if (!is_q_admissible_tet(ctx, l))
        return Fraction();
    return tet_generic(l);
}

Complex delta_value(const RootContext &ctx, int n) {
    static Memo<std::pair<arith::RootKey, int>, Complex> memo;
    return memo.get({ctx.key(), n}, [&] { return delta(ctx, n).evaluate(ctx); });
}

Complex theta_value(const RootContext &ctx, const ColorTriple &t) {
    if (!is_q_admissible(ctx, t))
        return 0.0;
    static Memo<std::pair<arith::RootKey, std::array<int, 3>>, Complex> memo;
    return memo.get({ctx.key(), {t.a, t.b, t.c}}, [&] { return theta_generic(t).evaluate(ctx); });
}

Complex tet_value(const RootContext &ctx, const TetLabels &l) {
    if (!is_q_admissible_tet(ctx, l))
        return 0.0;
    static Memo<std::pair<arith::RootKey, TetLabels>, Complex> memo;
    return memo.get({ctx.key(), l}, [&] { return tet_generic(l).evaluate(ctx); });
}

Fraction delta_oracle(const RootContext &ctx, int n) {
    check_color(ctx, n);
    if (n == ctx.r() - 1)
        return tl::tl_trace(tl::jones_wenzl(ctx, n));
    return tl::bracket(ctx, tl::unknot_diagram(n), oracle_options());
}

Fraction theta_oracle(const RootContext &ctx, const ColorTriple &t) {
    if (!is_q_admissible(ctx, t))
        return Fraction();
    return tl::bracket(ctx, tl::theta_diagram(t.a, t.b, t.c), oracle_options());
}

Fraction tet_oracle(const RootContext &ctx, const TetLabels &l) {
    if (!is_q_admissible_tet(ctx, l))
        return Fraction();
    return tl::bracket(ctx, tl::tet_diagram(l[kA], l[kB], l[kC], l[kD], l[kE], l[kF]), oracle_options());
}

const std::vector<std::array<int, 6>> &tet_slot_permutations() {
    static const std::vector<std::array<int, 6>> perms = [] {
        // Edge slot joining graph vertices i and j.
        int slot[4][4];
        for (int s = 0; s < 6; ++s) {
            int ends[2], k = 0;
            for (int v = 0; v < 4; ++v)
                if (std::find(kTetFaces[v].begin(), kTetFaces[v].end(), s) != kTetFaces[v].end())
                    ends[k++] = v;
            slot[ends[0]][ends[1]] = slot[ends[1]][ends[0]] = s;
        }
        std::vector<std::array<int, 6>> out;
        std::array<int, 4> pi{0, 1, 2, 3};
        do {
            std::array<int, 6> p{};
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    p[slot[pi[i]][pi[j]]] = slot[i][j];
            out.push_back(p);
        } while (std::next_permutation(pi.begin(), pi.end()));
        return out;
    }();
    return perms;
}

std::vector<TetLabels> tet_relabelings(const TetLabels &l) {
    std::vector<TetLabels> out;
    for (const auto &p : tet_slot_permutations()) {
        TetLabels m;
        for (int s = 0; s < 6; ++s)
            m[s] = l[p[s]];
        out.push_back(m);
    }
    return out;
}

Fraction sixj_exact(const RootContext &ctx, int a, int b, int c, int d, int i, int j) {
    const TetLabels labels{a, d, i, c, b, j};
    const Fraction t = tet(ctx, labels);
    if (t.is_zero())
        return Fraction();
    const Fraction den = theta(ctx, {a, d, i}) * theta(ctx, {c, b, i});
    if (den.vanishes_at(ctx))
        throw DomainError("6j symbol is 0/0");
    return delta(ctx, i) * t / den;
}

Complex sixj(const RootContext &ctx, int a, int b, int c, int d, int i, int j) {
    const TetLabels labels{a, d, i, c, b, j};
    const Complex t = tet_value(ctx, labels);
    if (!is_q_admissible_tet(ctx, labels))
        return 0.0;
    const Complex den = theta_value(ctx, {a, d, i}) * theta_value(ctx, {c, b, i});
    if (std::abs(den) == 0.0)
        throw DomainError("6j symbol is 0/0");
    return delta_value(ctx, i) * t / den;
}

LaurentPoly half_twist_coeff(const RootContext &ctx, int n, int framing2) {
    if (n < 0 || n > ctx.r() - 2)
        throw DomainError("colour " + std::to_string(n) + " outside 0.." + std::to_string(ctx.r() - 2));
    return tl::twist_factor(ctx, n, framing2);
}

LaurentPoly omega_unknot_sum(const RootContext &ctx, int framing) {
    LaurentPoly sum;
    for (int n = 0; n <= ctx.r() - 2; ++n) {
        const LaurentPoly d = *delta_generic(n).as_polynomial();
        sum += d * d * tl::twist_factor(ctx, n, 2 * framing);
    }
    return sum;
}

Complex omega_unknot(const RootContext &ctx, int framing) {
    return arith::eta(ctx) * omega_unknot_sum(ctx, framing).evaluate(ctx);
}

Complex fusion2_coeff(const RootContext &ctx, int a, int b) {
    if (a != b)
        return 0.0;
    const Complex d = delta_value(ctx, a);
    if (std::abs(d) < 1e-12)
        throw DomainError("fusion through a vanishing circle");
    return 1.0 / (arith::eta(ctx) * d);
}

Complex fusion3_coeff(const RootContext &ctx, const ColorTriple &t) {
    if (!is_q_admissible(ctx, t))
        return 0.0;
    const Complex th = theta_value(ctx, t);
    if (std::abs(th) < 1e-12)
        throw DomainError("fusion through a vanishing theta");
    return 1.0 / (arith::eta(ctx) * th);
}

} // namespace shadowsum::recoupling
