#include "shadowsum/checks/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/checks/diagrams.hpp"
#include "recorder.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/recoupling/recoupling.hpp"
#include "shadowsum/tl/bracket.hpp"
#include "shadowsum/tl/temperley_lieb.hpp"

namespace shadowsum::checks {

using arith::Complex;
using arith::Fraction;
using arith::LaurentPoly;
using namespace recoupling;

namespace {

const tl::BracketOptions kOracle{{1 << 20, 14}, false};

std::string labels(std::initializer_list<int> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << ')';
    return os.str();
}

Fraction br(const RootContext &ctx, const tl::FramedGraphDiagram &d) { return tl::bracket(ctx, d, kOracle); }

bool close(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol; }

} // namespace

CheckResult check_projectors(const RootContext &ctx) {
    Recorder rec("projectors", "Jones-Wenzl idempotence, annihilation, absorption and symmetry");
    const int top = std::min(6, ctx.r() - 1);
    for (int n = 0; n <= top; ++n) {
        const tl::TLElement &f = tl::jones_wenzl(ctx, n);
        const std::string tag = "n=" + std::to_string(n);
        rec.expect(tl::tl_compose(f, f) == f, [&] { return tag + " not idempotent"; });
        rec.expect(f.mirrored() == f, [&] { return tag + " not mirror symmetric"; });
        for (int i = 1; i < n; ++i) {
            const auto e = tl::TLElement::from_diagram(tl::TLDiagram::generator(n, i));
            rec.expect(tl::tl_compose(f, e).is_zero() && tl::tl_compose(e, f).is_zero(),
                       [&] { return tag + " does not annihilate e_" + std::to_string(i); });
        }
        for (int m = n; m <= top; ++m) {
            const tl::TLElement &g = tl::jones_wenzl(ctx, m);
            rec.expect(tl::tl_compose(f.embedded(m), g) == g && tl::tl_compose(g, f.embedded(m)) == g,
                       [&] { return tag + " not absorbed by m=" + std::to_string(m); });
        }
    }
    return rec.done();
}

CheckResult check_delta_oracle(const RootContext &ctx) {
    Recorder rec("delta", "closed-form Delta_n against the trace of the projector");
    for (int n = 0; n <= std::min(6, ctx.r() - 1); ++n) {
        rec.expect(delta(ctx, n) == tl::tl_trace(tl::jones_wenzl(ctx, n)),
                   [&] { return "n=" + std::to_string(n); });
        if (n <= ctx.r() - 2)
            rec.expect(delta(ctx, n) == delta_oracle(ctx, n), [&] { return "bracket n=" + std::to_string(n); });
    }
    rec.expect(std::abs(delta_value(ctx, ctx.r() - 1)) < 1e-9, [] { return "Delta_{r-1} != 0"; });
    return rec.done();
}

CheckResult check_theta_tet_oracle(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("theta-tet", "memoised theta and tet against fresh bracket evaluations");
    const int top = ctx.r() - 2;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b)
            for (int c = 0; c <= top; ++c) {
                if (!is_q_admissible(ctx, {a, b, c}))
                    continue;
                rec.expect(theta(ctx, {a, b, c}) == theta_oracle(ctx, {a, b, c}),
                           [&] { return "theta" + labels({a, b, c}); });
            }
    TetLabels l{};
    const int base = top + 1;
    int count = 1;
    for (int s = 0; s < 6; ++s)
        count *= base;
    for (int code = 0; code < count; ++code) {
        int x = code, sum = 0;
        for (int s = 0; s < 6; ++s) {
            l[s] = x % base;
            x /= base;
            sum += l[s];
        }
        if (sum > 2 * opts.max_label_sum || !is_q_admissible_tet(ctx, l))
            continue;
        const auto rel = tet_relabelings(l);
        if (*std::min_element(rel.begin(), rel.end()) != l)
            continue;
        rec.guarded(
            [&] {
                const Fraction memo = tet(ctx, l);
                rec.expect(memo == tet_oracle(ctx, l), [&] {
                    return "tet" + labels({l[0], l[1], l[2], l[3], l[4], l[5]});
                });
                for (const auto &m : rel)
                    rec.expect(tet(ctx, m) == memo, [&] {
                        return "tet symmetry" + labels({m[0], m[1], m[2], m[3], m[4], m[5]});
                    });
            },
            [&] { return "tet" + labels({l[0], l[1], l[2], l[3], l[4], l[5]}); });
    }
    return rec.done();
}

CheckResult check_fusion2(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("fusion2", "2-strand fusion through an Omega-coloured ring");
    const int top = ctx.r() - 2;
    LaurentPoly norm;
    for (int n = 0; n <= top; ++n)
        norm += *delta(ctx, n).as_polynomial() * *delta(ctx, n).as_polynomial();
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top && a + b <= opts.max_label_sum; ++b) {
            rec.guarded(
                [&] {
                    // eta sum_n Delta_n <ring_n> = fusion2 * <closure of the fused strands>.
                    Fraction lhs;
                    Complex lhs_num = 0.0;
                    for (int n = 0; n <= top; ++n) {
                        const Fraction term = delta(ctx, n) * br(ctx, ring_around_two(n, a, b));
                        lhs += term;
                    }
                    lhs_num = arith::eta(ctx) * lhs.evaluate(ctx);
                    const Fraction exact = a == b ? Fraction(norm) : Fraction();
                    rec.expect(lhs.equals_at(ctx, exact), [&] { return "exact " + labels({a, b}); });
                    const Complex rhs = fusion2_coeff(ctx, a, b) * (a == b ? delta_value(ctx, a) : 0.0);
                    rec.expect(close(lhs_num, rhs, opts.tolerance), [&] { return "numeric " + labels({a, b}); });
                },
                [&] { return labels({a, b}); });
        }
    return rec.done();
}

CheckResult check_fusion3(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("fusion3", "3-strand fusion through an Omega-coloured ring");
    const int top = ctx.r() - 2;
    LaurentPoly norm;
    for (int n = 0; n <= top; ++n)
        norm += *delta(ctx, n).as_polynomial() * *delta(ctx, n).as_polynomial();
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b)
            for (int c = 0; c <= top && a + b + c <= opts.max_label_sum; ++c) {
                if (!is_admissible({a, b, c}))
                    continue;
                rec.guarded(
                    [&] {
                        Fraction lhs;
                        for (int n = 0; n <= top; ++n)
                            lhs += delta(ctx, n) * br(ctx, ring_around_theta(n, a, b, c));
                        // Cutting along the ring leaves two theta graphs.
                        const Fraction th = theta(ctx, {a, b, c});
                        rec.expect(lhs.equals_at(ctx, Fraction(norm) * th),
                                   [&] { return "exact " + labels({a, b, c}); });
                        const Complex lhs_num = arith::eta(ctx) * lhs.evaluate(ctx);
                        const Complex th_num = theta_value(ctx, {a, b, c});
                        rec.expect(close(lhs_num, fusion3_coeff(ctx, {a, b, c}) * th_num * th_num, opts.tolerance),
                                   [&] { return "numeric " + labels({a, b, c}); });
                    },
                    [&] { return labels({a, b, c}); });
            }
    return rec.done();
}

CheckResult check_bubble(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("bubble", "bubble removal theta/Delta, zero on mismatched colours");
    const int top = ctx.r() - 2;
    for (int a = 0; a <= top; ++a)
        for (int a2 = 0; a2 <= top; ++a2)
            for (int b = 0; b <= top; ++b)
                for (int c = 0; c <= top && a + a2 + b + c <= opts.max_label_sum; ++c) {
                    if (!is_admissible({a, b, c}) || !is_admissible({a2, b, c}))
                        continue;
                    for (int e = 0; e <= top; ++e)
                        for (int f = 0; f <= top && e + f <= opts.max_label_sum; ++f) {
                            if (!is_admissible({a, e, f}) || !is_admissible({a2, e, f}))
                                continue;
                            rec.guarded(
                                [&] {
                                    const Fraction lhs = br(ctx, double_bubble(a, a2, b, c, e, f));
                                    Fraction rhs;
                                    if (a == a2)
                                        rhs = theta(ctx, {a, b, c}) * theta(ctx, {a, e, f}) / delta(ctx, a);
                                    rec.expect(lhs.equals_at(ctx, rhs),
                                               [&] { return labels({a, a2, b, c, e, f}); });
                                    if (a != a2)
                                        rec.expect(lhs.is_zero(), [&] {
                                            return "generic zero " + labels({a, a2, b, c, e, f});
                                        });
                                },
                                [&] { return labels({a, a2, b, c, e, f}); });
                        }
                }
    return rec.done();
}

CheckResult check_lemma(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("triangle", "triangle reduction tet/theta, zero off q-admissible legs");
    const int top = ctx.r() - 2;
    auto vertices_ok = [](int a, int b, int c, int d, int e, int f) {
        return is_admissible({a, b, f}) && is_admissible({c, d, f}) && is_admissible({a, d, e});
    };
    std::array<int, 6> x{};
    int count = 1;
    for (int s = 0; s < 6; ++s)
        count *= top + 1;
    for (int code = 0; code < count; ++code) {
        int y = code, sum = 0;
        for (int s = 0; s < 6; ++s) {
            x[s] = y % (top + 1);
            y /= top + 1;
            sum += x[s];
        }
        const auto [a, b, c, d, e, f] = x;
        if (sum > opts.max_label_sum || !vertices_ok(a, b, c, d, e, f))
            continue;
        const bool legs_q = is_q_admissible(ctx, {e, b, c});
        const TetLabels t1{a, b, f, c, d, e};
        rec.guarded(
            [&] {
                if (is_admissible({e, b, c}))
                    rec.expect(br(ctx, triangle_vertex_closure(a, b, c, d, e, f)).equals_at(ctx, tet(ctx, t1)),
                               [&] { return "vertex closure " + labels({a, b, c, d, e, f}); });
                for (int a2 = 0; a2 <= top; ++a2)
                    for (int d2 = 0; d2 <= top; ++d2)
                        for (int f2 = 0; f2 <= top && a2 + d2 + f2 <= a + d + f; ++f2) {
                            if (!vertices_ok(a2, b, c, d2, e, f2))
                                continue;
                            const Fraction lhs = br(ctx, triangle_prism(a, b, c, d, e, f, a2, d2, f2));
                            Fraction rhs;
                            if (legs_q)
                                rhs = tet(ctx, t1) * tet(ctx, {a2, b, f2, c, d2, e}) / theta(ctx, {e, b, c});
                            rec.expect(lhs.equals_at(ctx, rhs), [&] {
                                return "prism " + labels({a, b, c, d, e, f}) + labels({a2, d2, f2});
                            });
                        }
            },
            [&] { return labels({a, b, c, d, e, f}); });
    }
    return rec.done();
}

CheckResult check_sixj(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("6j", "6j symbols as Delta tet / theta theta, via the recoupling expansion");
    const int top = ctx.r() - 2;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b)
            for (int c = 0; c <= top; ++c)
                for (int d = 0; d <= top && a + b + c + d <= opts.max_label_sum; ++d) {
                    if ((a + b + c + d) % 2)
                        continue;
                    std::vector<int> js, is;
                    for (int j = 0; j <= top; ++j)
                        if (is_q_admissible(ctx, {a, b, j}) && is_q_admissible(ctx, {c, d, j}))
                            js.push_back(j);
                    for (int i = 0; i <= top; ++i)
                        if (is_q_admissible(ctx, {a, d, i}) && is_q_admissible(ctx, {c, b, i}))
                            is.push_back(i);
                    rec.guarded(
                        [&] {
                            // Expanding the j-channel network in the i-channel basis
                            // and closing it with the j'-channel network.
                            for (int j : js)
                                for (int j2 : js) {
                                    Fraction lhs;
                                    for (int i : is)
                                        lhs += sixj_exact(ctx, a, b, c, d, i, j) * tet_oracle(ctx, {a, d, i, c, b, j2});
                                    Fraction rhs;
                                    if (j == j2)
                                        rhs = theta(ctx, {a, b, j}) * theta(ctx, {c, d, j}) / delta(ctx, j);
                                    rec.expect(lhs.equals_at(ctx, rhs), [&] {
                                        return labels({a, b, c, d}) + " j=" + std::to_string(j) +
                                               " j'=" + std::to_string(j2);
                                    });
                                }
                            for (int i : is)
                                for (int j : js) {
                                    const Complex x = sixj(ctx, a, b, c, d, i, j);
                                    const Complex y = sixj_exact(ctx, a, b, c, d, i, j).evaluate(ctx);
                                    rec.expect(close(x, y, opts.tolerance),
                                               [&] { return "numeric " + labels({a, b, c, d, i, j}); });
                                }
                            // With b = 0 the recoupling is trivial.
                            if (b == 0)
                                for (int i : is)
                                    for (int j : js)
                                        rec.expect(sixj_exact(ctx, a, 0, c, d, i, j) == Fraction(1),
                                                   [&] { return "trivial " + labels({a, c, d}); });
                        },
                        [&] { return labels({a, b, c, d}); });
                }
    return rec.done();
}

CheckResult check_twists(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("twists", "full and half twist coefficients");
    const int top = ctx.r() - 2;
    for (int n = 0; n <= top; ++n) {
        const LaurentPoly full = LaurentPoly::monomial(n % 2 ? -1 : 1, 2 * (n * n + 2 * n));
        rec.expect(half_twist_coeff(ctx, n, 2) == full, [&] { return "full twist n=" + std::to_string(n); });
        rec.expect(arith::vanishes_at(ctx, half_twist_coeff(ctx, n, 1) * half_twist_coeff(ctx, n, 1) - full),
                   [&] { return "half twist squared n=" + std::to_string(n); });
        rec.expect(half_twist_coeff(ctx, n, 0) == LaurentPoly(1), [&] { return "zero twist"; });
        for (int k = -3; k <= 3; ++k)
            rec.guarded(
                [&] {
                    rec.expect(br(ctx, tl::unknot_diagram(n, k))
                                   .equals_at(ctx, delta(ctx, n) * Fraction(half_twist_coeff(ctx, n, k))),
                               [&] { return "framed unknot n=" + std::to_string(n) + " k2=" + std::to_string(k); });
                },
                [&] { return "framed unknot n=" + std::to_string(n); });
    }
    // A kink on a graph edge is a full twist of that edge.
    for (int a = 0; a <= top; ++a)
        for (int b = 1; b <= top; ++b)
            for (int c = 0; c <= top && a + b + c <= opts.max_label_sum; ++c) {
                if (!is_admissible({a, b, c}))
                    continue;
                for (bool positive : {true, false})
                    rec.guarded(
                        [&] {
                            const Fraction lhs = br(ctx, theta_with_kink(a, b, c, positive));
                            const Fraction rhs = theta(ctx, {a, b, c}) *
                                                 Fraction(half_twist_coeff(ctx, b, positive ? 2 : -2));
                            rec.expect(lhs.equals_at(ctx, rhs), [&] { return "kink " + labels({a, b, c}); });
                        },
                        [&] { return "kink " + labels({a, b, c}); });
            }
    // sqrt(-1) A^{3/2} for one positive half twist on a single strand.
    const LaurentPoly half1 = ctx.sqrt_minus_one_sign() > 0 ? LaurentPoly::monomial(1, 2 * ctx.r() + 3)
                                                            : LaurentPoly::monomial(-1, 2 * ctx.r() + 3);
    rec.expect(arith::vanishes_at(ctx, half_twist_coeff(ctx, 1, 1) - half1), [] { return "half twist n=1"; });
    if (top >= 2)
        rec.expect(half_twist_coeff(ctx, 2, 2) == LaurentPoly::monomial(1, 16), [] { return "full twist n=2"; });
    return rec.done();
}

CheckResult check_handleslide(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("handleslide", "sliding one Omega-coloured component over another");
    const int top = ctx.r() - 2;
    Fraction before, after;
    rec.guarded(
        [&] {
            for (int m = 0; m <= top; ++m)
                for (int n = 0; n <= top; ++n) {
                    const Fraction w = delta(ctx, m) * delta(ctx, n);
                    before += w * br(ctx, unlink2(m, n).diagram);
                    after += w * br(ctx, unlink2_slid(m, n).diagram);
                }
            rec.expect(before.equals_at(ctx, after), [] { return "exact"; });
            const Complex eta = arith::eta(ctx);
            rec.expect(close(eta * eta * before.evaluate(ctx), eta * eta * after.evaluate(ctx), opts.tolerance),
                       [] { return "numeric"; });
            rec.expect(close(eta * eta * after.evaluate(ctx), 1.0 / (eta * eta), opts.tolerance),
                       [] { return "value eta^-2"; });
        },
        [] { return "unlink"; });
    return rec.done();
}

CheckResult check_constants(const RootContext &ctx, const CheckOptions &opts) {
    Recorder rec("constants", "eta, Omega U = 1/eta, Omega U+ Omega U- = 1");
    const Complex eta = arith::eta(ctx);
    Complex sum = 0.0;
    for (int n = 0; n <= ctx.r() - 2; ++n)
        sum += delta_value(ctx, n) * delta_value(ctx, n);
    rec.expect(close(1.0 / (eta * eta), sum, opts.tolerance), [] { return "eta^-2 = sum Delta^2"; });
    rec.expect(close(omega_unknot(ctx, 0), 1.0 / eta, opts.tolerance), [] { return "Omega U = 1/eta"; });
    rec.expect(close(omega_unknot(ctx, 1) * omega_unknot(ctx, -1), 1.0, opts.tolerance),
               [] { return "Omega U+ Omega U- = 1"; });
    if (ctx.a_exponent() == 1 && ctx.sqrt_branch() == 0) {
        const double r = ctx.r();
        rec.expect(close(eta, std::sqrt(2.0 / r) * std::sin(std::numbers::pi / r), opts.tolerance),
                   [] { return "eta closed form"; });
        rec.expect(close(arith::gauss_sum(ctx), 2.0 * std::sqrt(2.0 * r) * std::polar(1.0, std::numbers::pi / 4),
                         opts.tolerance),
                   [] { return "Gauss sum"; });
    }
    return rec.done();
}

std::vector<CheckResult> selftest(const RootContext &ctx, const CheckOptions &opts) {
    return {check_constants(ctx, opts), check_projectors(ctx),     check_delta_oracle(ctx),
            check_theta_tet_oracle(ctx, opts), check_twists(ctx, opts), check_fusion2(ctx, opts),
            check_fusion3(ctx, opts),    check_bubble(ctx, opts),   check_lemma(ctx, opts),
            check_sixj(ctx, opts),       check_handleslide(ctx, opts)};
}

} // namespace shadowsum::checks
