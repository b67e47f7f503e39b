#include "shadowsum/tl/bracket.hpp"

#include <string>

#include "shadowsum/error.hpp"

namespace shadowsum::tl {

using arith::LaurentPoly;

namespace {

void check_colors(const RootContext &ctx, const FramedGraphDiagram &d) {
    for (std::size_t a = 0; a < d.arcs.size(); ++a)
        if (d.arcs[a].color > ctx.r() - 2)
            throw DomainError("arc " + std::to_string(a) + " has colour " +
                              std::to_string(d.arcs[a].color) + " above r - 2 = " +
                              std::to_string(ctx.r() - 2));
}

NetworkOptions network_options(const BracketOptions &opts) { return {opts.budget, opts.mirror}; }

} // namespace

LaurentPoly twist_factor(const RootContext &ctx, int n, int framing2) {
    const long long f = framing2;
    long long exponent = static_cast<long long>(n * n + 2 * n) * f;
    long long sign_power;
    if (f % 2 == 0) {
        sign_power = n * (f / 2);
    } else {
        sign_power = n * ((f - 1) / 2);
        if (ctx.sqrt_minus_one_sign() < 0)
            sign_power += n;
        exponent += 2LL * ctx.r() * n;
    }
    const LaurentPoly::Coeff sign = (sign_power % 2 == 0) ? 1 : -1;
    return LaurentPoly::monomial(sign, static_cast<int>(exponent));
}

LaurentPoly framing_factor(const RootContext &ctx, const FramedGraphDiagram &d) {
    LaurentPoly f(1);
    for (const auto &arc : d.arcs)
        if (arc.framing2 != 0)
            f *= twist_factor(ctx, arc.color, arc.framing2);
    return f;
}

Fraction bracket(const RootContext &ctx, const FramedGraphDiagram &d, const BracketOptions &opts) {
    check_colors(ctx, d);
    const Network net = cable(d, network_options(opts));
    return contract_exact(net) * Fraction(framing_factor(ctx, d));
}

Complex bracket_numeric(const RootContext &ctx, const FramedGraphDiagram &d, const BracketOptions &opts) {
    check_colors(ctx, d);
    const Network net = cable(d, network_options(opts));
    return contract_numeric(net, ctx) * framing_factor(ctx, d).evaluate(ctx);
}

Fraction bracket_generic(const FramedGraphDiagram &d, const BracketOptions &opts) {
    for (const auto &arc : d.arcs)
        if (arc.framing2 % 2 != 0)
            throw DomainError("half-integer framing needs a root context");
    const Network net = cable(d, network_options(opts));
    return contract_exact(net) * Fraction(framing_factor(RootContext(3), d));
}

} // namespace shadowsum::tl
