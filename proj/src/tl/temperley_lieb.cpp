#include "shadowsum/tl/temperley_lieb.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/error.hpp"

namespace shadowsum::tl {

TLDiagram TLDiagram::identity(int n) {
    TLDiagram d;
    d.n = n;
    d.matching.resize(2 * n);
    for (int p = 0; p < n; ++p) {
        d.matching[p] = static_cast<std::uint8_t>(2 * n - 1 - p);
        d.matching[2 * n - 1 - p] = static_cast<std::uint8_t>(p);
    }
    return d;
}

TLDiagram TLDiagram::generator(int n, int i) {
    if (i < 1 || i >= n)
        throw DomainError("generator index out of range");
    TLDiagram d = identity(n);
    auto link = [&](int a, int b) {
        d.matching[a] = static_cast<std::uint8_t>(b);
        d.matching[b] = static_cast<std::uint8_t>(a);
    };
    link(d.bottom(i - 1), d.bottom(i));
    link(d.top(i - 1), d.top(i));
    return d;
}

bool TLDiagram::is_valid() const {
    if (static_cast<int>(matching.size()) != 2 * n || loops < 0)
        return false;
    for (int a = 0; a < 2 * n; ++a) {
        const int b = matching[a];
        if (b >= 2 * n || b == a || matching[b] != a)
            return false;
    }
    for (int a = 0; a < 2 * n; ++a)
        for (int c = 0; c < 2 * n; ++c) {
            const int b = matching[a], d = matching[c];
            if (a < c && c < b && b < d)
                return false;
        }
    return true;
}

TLDiagram TLDiagram::mirrored() const {
    TLDiagram out;
    out.n = n;
    out.loops = loops;
    out.matching.resize(2 * n);
    auto image = [&](int idx) { return idx < n ? n - 1 - idx : 3 * n - 1 - idx; };
    for (int a = 0; a < 2 * n; ++a)
        out.matching[image(a)] = static_cast<std::uint8_t>(image(matching[a]));
    return out;
}

TLDiagram TLDiagram::embedded(int m) const {
    if (m < n)
        throw DomainError("cannot embed into fewer strands");
    TLDiagram out = identity(m);
    out.loops = loops;
    auto image = [&](int idx) { return idx < n ? idx : 2 * m - 1 - (2 * n - 1 - idx); };
    for (int a = 0; a < 2 * n; ++a)
        out.matching[image(a)] = static_cast<std::uint8_t>(image(matching[a]));
    return out;
}

TLDiagram compose(const TLDiagram &x, const TLDiagram &y) {
    if (x.n != y.n)
        throw DomainError("strand count mismatch in composition: " + std::to_string(x.n) + " vs " +
                          std::to_string(y.n));
    const int n = x.n, m = 2 * n;
    // Ids 0..2n-1 are points of x, 2n..4n-1 points of y.
    auto partner = [&](int id) { return id < m ? int(x.matching[id]) : m + y.matching[id - m]; };
    auto glued = [&](int id) { return id < m ? m + (m - 1 - id) : m - 1 - (id - m); };
    auto external = [&](int id) { return id < m ? id < n : id - m >= n; };
    auto result_index = [&](int id) { return id < m ? id : id - m; };

    TLDiagram out;
    out.n = n;
    out.loops = x.loops + y.loops;
    out.matching.assign(m, 0);
    std::vector<char> seen(2 * m, 0);
    for (int start = 0; start < 2 * m; ++start) {
        if (!external(start) || seen[start])
            continue;
        int cur = start;
        seen[cur] = 1;
        while (true) {
            const int p = partner(cur);
            seen[p] = 1;
            if (external(p)) {
                out.matching[result_index(start)] = static_cast<std::uint8_t>(result_index(p));
                out.matching[result_index(p)] = static_cast<std::uint8_t>(result_index(start));
                break;
            }
            cur = glued(p);
            seen[cur] = 1;
        }
    }
    for (int id = 0; id < 2 * m; ++id) {
        if (seen[id])
            continue;
        ++out.loops;
        int cur = id;
        do {
            seen[cur] = 1;
            const int p = partner(cur);
            seen[p] = 1;
            cur = glued(p);
        } while (!seen[cur]);
    }
    return out;
}

int closure_loops(const TLDiagram &d) {
    const int n = d.n;
    std::vector<char> seen(2 * n, 0);
    auto closed = [&](int idx) { return idx < n ? 2 * n - 1 - idx : 2 * n - 1 - idx; };
    int loops = d.loops;
    for (int a = 0; a < 2 * n; ++a) {
        if (seen[a])
            continue;
        ++loops;
        int cur = a;
        while (!seen[cur]) {
            seen[cur] = 1;
            const int p = d.matching[cur];
            seen[p] = 1;
            cur = closed(p);
        }
    }
    return loops;
}

TLElement TLElement::from_diagram(const TLDiagram &d, Fraction coeff) {
    TLElement e(d.n);
    e.add(d, coeff * loop_power(d.loops));
    return e;
}

Fraction TLElement::coefficient(const TLDiagram &d) const {
    auto it = terms_.find(d.matching);
    return it == terms_.end() ? Fraction() : it->second;
}

void TLElement::add(const TLDiagram &d, const Fraction &coeff) {
    if (d.n != n_)
        throw DomainError("strand count mismatch");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(d.matching, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TLElement &TLElement::operator+=(const TLElement &o) {
    if (o.n_ != n_)
        throw DomainError("strand count mismatch");
    for (const auto &[k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

TLElement &TLElement::operator-=(const TLElement &o) { return *this += o * Fraction(-1); }

TLElement TLElement::operator*(const Fraction &c) const {
    TLElement out(n_);
    if (c.is_zero())
        return out;
    for (const auto &[k, v] : terms_)
        out.terms_.emplace(k, v * c);
    return out;
}

bool operator==(const TLElement &a, const TLElement &b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

TLElement TLElement::mirrored() const {
    TLElement out(n_);
    for (const auto &[k, c] : terms_) {
        TLDiagram d{n_, k, 0};
        out.add(d.mirrored(), c);
    }
    return out;
}

TLElement TLElement::embedded(int m) const {
    TLElement out(m);
    for (const auto &[k, c] : terms_) {
        TLDiagram d{n_, k, 0};
        out.add(d.embedded(m), c);
    }
    return out;
}

TLElement tl_compose(const TLElement &x, const TLElement &y) {
    if (x.n() != y.n())
        throw DomainError("strand count mismatch in composition: " + std::to_string(x.n()) +
                          " vs " + std::to_string(y.n()));
    std::map<TLElement::Key, Fraction> acc;
    for (const auto &[kx, cx] : x.terms()) {
        const TLDiagram dx{x.n(), kx, 0};
        for (const auto &[ky, cy] : y.terms()) {
            const TLDiagram d = compose(dx, TLDiagram{y.n(), ky, 0});
            Fraction c = cx * cy;
            if (d.loops)
                c *= loop_power(d.loops);
            auto [it, inserted] = acc.try_emplace(d.matching, c);
            if (!inserted)
                it->second += c;
        }
    }
    TLElement out(x.n());
    for (const auto &[k, c] : acc)
        out.add(TLDiagram{x.n(), k, 0}, c);
    return out;
}

Fraction tl_trace(const TLElement &x) {
    Fraction sum;
    for (const auto &[k, c] : x.terms())
        sum += c * loop_power(closure_loops(TLDiagram{x.n(), k, 0}));
    return sum;
}

Fraction loop_power(int k) {
    static const std::vector<Fraction> table = [] {
        std::vector<Fraction> t;
        Fraction p(1);
        const Fraction delta(arith::quantum_loop(RootContext(3)));
        for (int i = 0; i < 64; ++i) {
            t.push_back(p);
            p *= delta;
        }
        return t;
    }();
    if (k < 0)
        throw DomainError("negative loop count");
    if (k < static_cast<int>(table.size()))
        return table[k];
    return table.back() * loop_power(k - static_cast<int>(table.size()) + 1);
}

namespace {

struct ProjectorCache {
    std::shared_mutex mu;
    std::vector<std::unique_ptr<TLElement>> f;
};

ProjectorCache &projector_cache() {
    static ProjectorCache c;
    return c;
}

} // namespace

const TLElement &jones_wenzl_generic(int n) {
    if (n < 0)
        throw DomainError("negative projector size");
    auto &cache = projector_cache();
    {
        std::shared_lock lock(cache.mu);
        if (n < static_cast<int>(cache.f.size()))
            return *cache.f[n];
    }
    if (n >= 2)
        jones_wenzl_generic(n - 1);
    std::unique_lock lock(cache.mu);
    while (static_cast<int>(cache.f.size()) <= n) {
        const int m = static_cast<int>(cache.f.size());
        TLElement next(m);
        if (m <= 1) {
            next = TLElement::from_diagram(TLDiagram::identity(m));
        } else {
            // f(m) = f' + ([m-1]/[m]) f' e_{m-1} f',  f' = f(m-1) (x) 1
            const TLElement prev = cache.f[m - 1]->embedded(m);
            const TLElement e = TLElement::from_diagram(TLDiagram::generator(m, m - 1));
            const Fraction ratio =
                Fraction::quantum_integer(m - 1) / Fraction::quantum_integer(m);
            next = prev + tl_compose(tl_compose(prev, e), prev) * ratio;
        }
        cache.f.push_back(std::make_unique<TLElement>(std::move(next)));
    }
    return *cache.f[n];
}

const TLElement &jones_wenzl(const RootContext &ctx, int n) {
    if (n < 0 || n > ctx.r() - 1)
        throw DomainError("projector size " + std::to_string(n) + " outside 0.." +
                          std::to_string(ctx.r() - 1));
    return jones_wenzl_generic(n);
}

} // namespace shadowsum::tl
