#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadowsum/arith/constants.hpp"
#include "shadowsum/arith/signature.hpp"
#include "shadowsum/checks/checks.hpp"
#include "shadowsum/checks/diagrams.hpp"
#include "shadowsum/checks/random_shadow.hpp"
#include "shadowsum/recoupling/recoupling.hpp"
#include "shadowsum/shadow/families.hpp"
#include "shadowsum/shadow/shadow.hpp"
#include "shadowsum/surgery/surgery.hpp"

using namespace shadowsum;
using arith::Complex;
using arith::RootContext;

namespace {

constexpr double kTol = 1e-9;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

struct Outcome {
    int checked = 0;
    int failed = 0;
    std::string first;

    void expect(bool ok, const std::function<std::string()> &what) {
        ++checked;
        if (!ok && failed++ == 0)
            first = what();
    }
    void near(Complex got, Complex want, const std::string &what) {
        expect(std::abs(got - want) <= kTol, [&] { return what + ": got " + num(got) + ", want " + num(want); });
    }
};

bool report(int n, const Outcome &o, const std::string &extra, double secs) {
    const bool ok = o.failed == 0;
    std::printf("%s criterion %d: %d checks, %d failed, %.2f s", ok ? "PASS" : "FAIL", n, o.checked, o.failed, secs);
    if (!extra.empty())
        std::printf("; %s", extra.c_str());
    if (!ok)
        std::printf("; first: %s", o.first.c_str());
    std::printf("\n");
    return ok;
}

bool criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    for (int r = 3; r <= 9; ++r) {
        const RootContext ctx(r);
        const Complex eta = arith::eta(ctx);
        const std::string at = "r=" + std::to_string(r);
        o.near(surgery::invariant_from_surgery(ctx, surgery::empty_link()).value, eta, at + " S^3");
        for (int g = 0; g <= 5; ++g)
            o.near(surgery::invariant_from_surgery(ctx, surgery::unlink(std::vector<int>(g, 0))).value,
                   std::pow(eta, 1 - g), at + " g=" + std::to_string(g));
        o.near(shadow::invariant_from_shadow(ctx, shadow::sphere(0)).value, 1.0, at + " sphere gleam 0");
    }
    const double secs = seconds_since(t0);
    o.expect(secs < 1.0, [&] { return "runtime " + std::to_string(secs) + " s"; });
    return report(1, o, "", secs);
}

bool criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    int agreeing[2] = {0, 0};
    int rows = 0;
    std::string miss[2];
    for (int r = 3; r <= 8; ++r) {
        const RootContext ctx(r);
        for (int n = -4; n <= 4; ++n) {
            ++rows;
            const Complex sur = surgery::invariant_from_surgery(ctx, surgery::unknot(n)).value;
            for (int s = 0; s < 2; ++s) {
                shadow::StateSumOptions opts;
                opts.phase_sign = s == 0 ? shadow::PhaseSign::minus : shadow::PhaseSign::plus;
                const Complex sha = shadow::invariant_from_shadow(ctx, shadow::sphere(2 * n), std::nullopt, opts).value;
                if (std::abs(sur - sha) <= kTol)
                    ++agreeing[s];
                else if (miss[s].empty())
                    miss[s] = "r=" + std::to_string(r) + " n=" + std::to_string(n) + " surgery " + num(sur) +
                              " shadow " + num(sha);
            }
        }
    }
    Outcome o;
    const bool minus = agreeing[0] == rows, plus = agreeing[1] == rows;
    o.expect(minus != plus, [&] {
        return "minus " + std::to_string(agreeing[0]) + "/" + std::to_string(rows) + " (" + miss[0] + "), plus " +
               std::to_string(agreeing[1]) + "/" + std::to_string(rows) + " (" + miss[1] + ")";
    });
    std::string extra = "phase_sign minus agrees on " + std::to_string(agreeing[0]) + "/" + std::to_string(rows) +
                        ", plus on " + std::to_string(agreeing[1]) + "/" + std::to_string(rows);
    if (minus != plus)
        extra += "; convention: " + std::string(plus ? "plus" : "minus");
    return report(2, o, extra, seconds_since(t0));
}

bool criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    double ratio = 0.0;
    for (int r = 3; r <= 12; ++r) {
        const RootContext ctx(r);
        const std::string at = "r=" + std::to_string(r);
        const double rr = r;
        o.near(arith::eta(ctx), std::sqrt(2.0 / rr) * std::sin(std::numbers::pi / rr), at + " eta");
        Complex gauss = 0.0;
        for (int n = 1; n <= 4 * r; ++n)
            gauss += std::polar(1.0, std::numbers::pi * n * n / (2.0 * r));
        o.near(gauss, 2.0 * std::sqrt(2.0 * rr) * std::polar(1.0, std::numbers::pi / 4), at + " Gauss sum");
        o.near(recoupling::omega_unknot(ctx, 0), 1.0 / arith::eta(ctx), at + " Omega U");
        const Complex kappa = arith::kappa(ctx);
        o.near(recoupling::omega_unknot(ctx, 1), kappa, at + " Omega U+ vs kappa");
        o.near(recoupling::omega_unknot(ctx, -1), 1.0 / kappa, at + " Omega U- vs 1/kappa");
        ratio = std::abs(recoupling::omega_unknot(ctx, 1)) / std::abs(kappa);
    }
    char extra[96];
    std::snprintf(extra, sizeof extra, "|Omega U+| / |kappa| = %.6g at r=12 (sqrt r = %.6g)", ratio, std::sqrt(12.0));
    return report(3, o, extra, seconds_since(t0));
}

bool run_checks(int n, const std::vector<checks::CheckResult> &results, double secs, double limit) {
    Outcome o;
    std::string names;
    for (const auto &c : results) {
        o.checked += c.cases;
        o.failed += c.failures;
        if (c.failures > 0 && o.first.empty())
            o.first = c.name + ": " + c.first_failure;
        names += (names.empty() ? "" : " ") + c.name;
    }
    if (limit > 0 && secs >= limit) {
        ++o.failed;
        if (o.first.empty())
            o.first = "runtime over " + std::to_string(limit) + " s";
    }
    return report(n, o, names, secs);
}

bool criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<checks::CheckResult> res;
    for (int r = 3; r <= 9; ++r) {
        auto c = checks::check_projectors(RootContext(r));
        c.name += "@" + std::to_string(r);
        res.push_back(c);
    }
    return run_checks(4, res, seconds_since(t0), 0);
}

bool criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    const RootContext ctx(7);
    checks::CheckOptions opts;
    opts.max_label_sum = 8;
    opts.tolerance = kTol;
    const std::vector<checks::CheckResult> res{
        checks::check_theta_tet_oracle(ctx, opts), checks::check_fusion2(ctx, opts), checks::check_fusion3(ctx, opts),
        checks::check_bubble(ctx, opts),           checks::check_lemma(ctx, opts),   checks::check_twists(ctx, opts),
        checks::check_sixj(ctx, opts)};
    return run_checks(5, res, seconds_since(t0), 300.0);
}

bool criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    const surgery::SurgeryOptions wide{{64, 14}, false};
    const auto omega = [](int id) { return surgery::Component{id, 0, surgery::Role::omega, std::nullopt}; };
    for (int r = 3; r <= 5; ++r) {
        const RootContext ctx(r);
        const auto before =
            surgery::from_diagram(surgery::diagram_from_builder(checks::unlink2(0, 0), {omega(1), omega(2)}));
        const auto after =
            surgery::from_diagram(surgery::diagram_from_builder(checks::unlink2_slid(0, 0), {omega(1), omega(2)}));
        const auto x = surgery::omega_evaluation(ctx, before, wide);
        const auto y = surgery::omega_evaluation(ctx, after, wide);
        o.near(y.value, x.value, "r=" + std::to_string(r) + " Omega(L)");
        o.near(surgery::invariant_from_surgery(ctx, after, wide).value,
               surgery::invariant_from_surgery(ctx, before, wide).value, "r=" + std::to_string(r) + " invariant");
    }
    return report(6, o, "", seconds_since(t0));
}

bool criterion7() {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    for (int n = -6; n <= 6; ++n) {
        const int sgn = (n > 0) - (n < 0);
        o.expect(arith::signature(std::vector<std::vector<long long>>{{n}}) == sgn,
                 [&] { return "1x1 (" + std::to_string(n) + ")"; });
        const auto s = shadow::sphere(2 * n);
        const auto basis = shadow::homology_h2(s);
        o.expect(basis.size() == 1, [&] { return "sphere gleam " + std::to_string(n) + " H2 rank"; });
        if (basis.size() != 1)
            continue;
        for (long long k = -3; k <= 3; ++k)
            for (long long h = -3; h <= 3; ++h) {
                shadow::Cycle x = basis[0], y = basis[0];
                for (auto &v : x)
                    v *= k;
                for (auto &v : y)
                    v *= h;
                o.expect(shadow::bilinear_form(s, x, y) == arith::Rational(k * h * n),
                         [&] { return "Q(k,h) on sphere gleam " + std::to_string(n); });
            }
        o.expect(shadow::signature(s) == sgn, [&] { return "sigma of sphere gleam " + std::to_string(n); });
    }
    return report(7, o, "", seconds_since(t0));
}

bool criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = checks::check_shadow_properties(1000, 20261018, 6);
    return run_checks(8, {res}, seconds_since(t0), 0);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    const std::vector<bool (*)()> all{criterion1, criterion2, criterion3, criterion4,
                                      criterion5, criterion6, criterion7, criterion8};
    bool ok = true;
    for (int i = 1; i <= 8; ++i)
        if (only == 0 || only == i)
            ok = all[i - 1]() && ok;
    return ok ? 0 : 1;
}
