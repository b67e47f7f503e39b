#include "shadowsum/arith/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "shadowsum/error.hpp"

namespace shadowsum::arith {

namespace {

struct Table {
    std::shared_mutex mu;
    std::map<int, LaurentPoly> plain;
    std::map<int, LaurentPoly> in_q;
};

Table &table() {
    static Table t;
    return t;
}

LaurentPoly compute(int d) {
    // x^d - 1 divided by every Phi_e with e a proper divisor of d.
    LaurentPoly p = LaurentPoly::monomial(1, d) - LaurentPoly(1);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0)
            continue;
        auto q = p.divide_exact(cyclotomic(e));
        if (!q)
            throw InternalError("cyclotomic recursion failed");
        p = *q;
    }
    return p;
}

} // namespace

const LaurentPoly &cyclotomic(int d) {
    if (d < 1)
        throw DomainError("cyclotomic index must be positive");
    auto &t = table();
    {
        std::shared_lock lock(t.mu);
        if (auto it = t.plain.find(d); it != t.plain.end())
            return it->second;
    }
    LaurentPoly p = compute(d);
    std::unique_lock lock(t.mu);
    return t.plain.try_emplace(d, std::move(p)).first->second;
}

const LaurentPoly &cyclotomic_in_q(int d) {
    auto &t = table();
    {
        std::shared_lock lock(t.mu);
        if (auto it = t.in_q.find(d); it != t.in_q.end())
            return it->second;
    }
    LaurentPoly p = cyclotomic(d).inflate(4);
    std::unique_lock lock(t.mu);
    return t.in_q.try_emplace(d, std::move(p)).first->second;
}

int euler_phi(int d) {
    int result = d;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p != 0)
            continue;
        while (d % p == 0)
            d /= p;
        result -= result / p;
    }
    if (d > 1)
        result -= result / d;
    return result;
}

} // namespace shadowsum::arith
