#include "shadowsum/arith/constants.hpp"

#include <cmath>
#include <numbers>

namespace shadowsum::arith {

LaurentPoly quantum_loop(const RootContext &) {
    return LaurentPoly::monomial(-1, 4) + LaurentPoly::monomial(-1, -4);
}

Complex eta(const RootContext &ctx) {
    const Complex num = ctx.s_power(4) - ctx.s_power(-4);
    const Complex v = num / Complex(0.0, std::sqrt(2.0 * ctx.r()));
    return {std::abs(v.real()), 0.0};
}

Complex gauss_sum(const RootContext &ctx) {
    Complex sum = 0.0;
    const long long n4 = 4LL * ctx.r();
    for (long long n = 1; n <= n4; ++n)
        sum += ctx.s_power(2 * ((n * n) % n4));
    return sum;
}

Complex kappa(const RootContext &ctx) {
    const int r = ctx.r();
    const Complex sqrt_minus_two(0.0, std::sqrt(2.0));
    return gauss_sum(ctx) / (2.0 * r * sqrt_minus_two * ctx.s_power(2LL * (3 + r * r)));
}

Complex kappa_principal_closed_form(int r) {
    const double phase = -std::numbers::pi * (2.0 * r * r - r + 6.0) / (4.0 * r);
    return Complex(0.0, -1.0 / std::sqrt(double(r))) * std::polar(1.0, phase);
}

} // namespace shadowsum::arith
