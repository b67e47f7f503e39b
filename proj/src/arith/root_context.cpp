#include "shadowsum/arith/root_context.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "shadowsum/error.hpp"

namespace shadowsum::arith {

RootContext::RootContext(int r, int k, int sqrt_branch, int sigma) : r_(r), sigma_(sigma) {
    if (r < 3)
        throw DomainError("r must be at least 3, got " + std::to_string(r));
    const int n = 4 * r;
    k_ = ((k % n) + n) % n;
    if (std::gcd(k_, n) != 1)
        throw DomainError("root exponent " + std::to_string(k) + " is not coprime to 4r = " +
                          std::to_string(n));
    if (sqrt_branch != 0 && sqrt_branch != 1)
        throw DomainError("sqrt branch must be 0 or 1");
    if (sigma != 1 && sigma != -1)
        throw DomainError("sqrt(-1) sign must be +1 or -1");
    m_ = k_ + sqrt_branch * n;
    auto table = std::make_shared<std::vector<Complex>>(8 * r);
    for (int j = 0; j < 8 * r; ++j) {
        // Exact values on the axes keep integer powers of A clean.
        if (j == 0)
            (*table)[j] = {1.0, 0.0};
        else if (j == 2 * r)
            (*table)[j] = {0.0, 1.0};
        else if (j == 4 * r)
            (*table)[j] = {-1.0, 0.0};
        else if (j == 6 * r)
            (*table)[j] = {0.0, -1.0};
        else
            (*table)[j] = std::polar(1.0, std::numbers::pi * j / (4.0 * r));
    }
    powers_ = std::move(table);
}

Complex RootContext::s_power(long long e) const {
    const long long n = 8LL * r_;
    long long idx = ((e % n) * m_) % n;
    if (idx < 0)
        idx += n;
    return (*powers_)[static_cast<std::size_t>(idx)];
}

} // namespace shadowsum::arith
