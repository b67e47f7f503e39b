#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "shadowsum/arith/constants.hpp"
#include "shadowsum/checks/random_shadow.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/recoupling/recoupling.hpp"
#include "shadowsum/shadow/families.hpp"
#include "shadowsum/shadow/shadow.hpp"
#include "shadowsum/shadow/shadow_io.hpp"

using namespace shadowsum;
using namespace shadowsum::shadow;
using arith::Complex;
using arith::RootContext;

namespace {

constexpr double kTol = 1e-9;

Complex ipow(Complex x, int e) {
    Complex y = 1.0;
    for (int i = 0; i < std::abs(e); ++i)
        y *= x;
    return e < 0 ? 1.0 / y : y;
}

// (-1)^n [n+1] from A directly.
Complex delta_at(const RootContext &ctx, int n) {
    const Complex a2 = ipow(ctx.A(), 2);
    return double(n % 2 ? -1 : 1) * (ipow(a2, n + 1) - ipow(a2, -n - 1)) / (a2 - 1.0 / a2);
}

// (-1)^{gc} A^{-gc(c+2)} for integer gleam g.
Complex lens_phase(const RootContext &ctx, int g, int c) {
    return double((g * c) % 2 ? -1 : 1) * ipow(ctx.A(), -g * c * (c + 2));
}

Complex sphere_sum(const RootContext &ctx, int n) {
    Complex sum = 0.0;
    for (int a = 0; a <= ctx.r() - 2; ++a)
        sum += delta_at(ctx, a) * delta_at(ctx, a) * lens_phase(ctx, n, a);
    return sum;
}

bool close(Complex x, Complex y, double tol = kTol) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); }

bool mentions(const std::vector<std::string> &xs, const std::string &what) {
    for (const auto &x : xs)
        if (x.find(what) != std::string::npos)
            return true;
    return false;
}

// Rank of an integer matrix over Q by Gaussian elimination in doubles; the
// entries are tiny.
int rank(std::vector<std::vector<double>> m) {
    int rk = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rk < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (int i = rk; i < static_cast<int>(m.size()); ++i)
            if (std::abs(m[i][c]) > 1e-12)
                p = i;
        if (p < 0)
            continue;
        std::swap(m[rk], m[p]);
        for (int i = 0; i < static_cast<int>(m.size()); ++i)
            if (i != rk) {
                const double f = m[i][c] / m[rk][c];
                for (int j = 0; j < cols; ++j)
                    m[i][j] -= f * m[rk][j];
            }
        ++rk;
    }
    return rk;
}

} // namespace

TEST_CASE("validation") {
    CHECK(validate(sphere(6)).ok());
    CHECK(validate(three_disks(1, -2, 3)).ok());
    CHECK(validate(theta_book(1, 1, 2)).ok());

    Shadow s = three_disks(0, 0, 0);
    s.edges[0].regions[1] = 99;
    auto v = validate(s);
    REQUIRE(v.violations.size() == 1);
    CHECK(mentions(v.violations, "missing region 99"));

    s = three_disks(0, 0, 0);
    s.regions[0].gleam2 = 1;
    v = validate(s);
    REQUIRE(v.violations.size() == 1);
    CHECK(mentions(v.violations, "gleam parity"));
    (*s.edges[0].nonorientable)[0] = true;
    CHECK(validate(s).ok());
    s.regions[0].gleam2 = 2;
    CHECK_FALSE(validate(s).ok());

    s = three_disks(0, 0, 0);
    s.edges[0].nonorientable.reset();
    v = validate(s);
    CHECK(v.ok());
    CHECK(mentions(v.warnings, "gleam parity not checked"));

    s = colored_disk(2, 0);
    s.regions[0].color.reset();
    CHECK(mentions(validate(s).violations, "no colour"));
    s = colored_disk(2, 0);
    s.boundary_edges[0].color = 1;
    CHECK(mentions(validate(s).violations, "has colour 1"));
    s = theta_book(1, 1, 1);
    CHECK(mentions(validate(s).violations, "non-admissible"));
    s = theta_book(3, 3, 2);
    CHECK(validate(s).ok());
    const RootContext r4(4);
    CHECK(mentions(validate(s, &r4).violations, "colour above"));

    s = sphere(0);
    s.regions.push_back(s.regions[0]);
    CHECK(mentions(validate(s).violations, "duplicate region"));
    s = three_disks(0, 0, 0);
    s.edges[0].chi = 2;
    CHECK(mentions(validate(s).violations, "chi 2"));

    // A vertex whose faces are not edges.
    s = sphere(0);
    s.vertices.push_back({1, {1, 1, 1, 1, 1, 1}});
    CHECK(mentions(validate(s).violations, "matching no edge"));
    s.edges.push_back({1, 1, {1, 1, 1}});
    CHECK(validate(s).ok());

    CHECK_THROWS_AS(check(theta_book(1, 1, 1)), ValidationError);
}

TEST_CASE("Euler characteristic") {
    CHECK(euler_characteristic(sphere(0)) == 2);
    for (int g = 0; g <= 4; ++g)
        CHECK(euler_characteristic(closed_surface(g, 0)) == 2 - 2 * g);
    CHECK(euler_characteristic(closed_surface(1, 0)) == 0);
    CHECK(euler_characteristic(three_disks(0, 0, 0)) == 3);
    CHECK(euler_characteristic(colored_disk(1, 0)) == 1);
    // Contractible: two boundary vertices, four arcs, three disks.
    CHECK(euler_characteristic(theta_book(1, 1, 2)) == 1);
    CHECK(euler_characteristic(Shadow{}) == 0);
}

TEST_CASE("colouring enumeration") {
    const RootContext ctx(5);
    const auto sph = enumerate_colorings(ctx, sphere(2));
    REQUIRE(sph.size() == 4);
    for (int c = 0; c < 4; ++c)
        CHECK(sph[c] == Coloring{c});

    for (int r = 3; r <= 9; ++r) {
        const RootContext c(r);
        Shadow s = sphere(0);
        s.edges.push_back({1, 0, {1, 1, 1}});
        std::vector<Coloring> expected;
        for (int a = 0; a <= r - 2; ++a)
            if (a % 2 == 0 && 3 * a <= 2 * (r - 2))
                expected.push_back({a});
        CHECK(enumerate_colorings(c, s) == expected);
    }

    Shadow fixed = three_disks(0, 0, 0);
    fixed.regions[1].external = true;
    fixed.regions[1].color = 2;
    fixed.boundary_edges.push_back({1, 0, 2, 2});
    const auto cs = enumerate_colorings(ctx, fixed);
    CHECK_FALSE(cs.empty());
    for (const auto &xi : cs)
        CHECK(xi[1] == 2);
    CHECK(cs == checks::naive_colorings(ctx, fixed));

    // Region-id order, not storage order.
    Shadow s = three_disks(0, 0, 0);
    std::swap(s.regions[0], s.regions[2]);
    const auto ordered = enumerate_colorings(ctx, s);
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const std::array<int, 3> p{ordered[i - 1][2], ordered[i - 1][1], ordered[i - 1][0]};
        const std::array<int, 3> q{ordered[i][2], ordered[i][1], ordered[i][0]};
        CHECK(p < q);
    }

    std::vector<Coloring> firsts;
    for_each_coloring(ctx, s, [&](const Coloring &xi) { firsts.push_back(xi); }, 1);
    for (const auto &xi : firsts)
        CHECK(xi[2] == 1);
}

TEST_CASE("phase") {
    for (int r : {3, 5, 7}) {
        const RootContext ctx(r);
        for (int c = 0; c <= r - 2; ++c) {
            CHECK(close(phase(ctx, Region{.gleam2 = 0}, c), 1.0));
            CHECK(close(phase(ctx, Region{.gleam2 = 2}, c), lens_phase(ctx, 1, c)));
            CHECK(close(phase(ctx, Region{.gleam2 = -6}, c), lens_phase(ctx, -3, c)));
            const Complex half = ipow(ctx.sqrt_minus_one(), c) * ctx.s_power(c * (c + 2));
            CHECK(close(phase(ctx, Region{.gleam2 = 1}, c), 1.0 / half));
            CHECK(close(phase(ctx, Region{.gleam2 = 1}, c, PhaseSign::plus), half));
            CHECK(close(phase(ctx, Region{.gleam2 = 2}, c, PhaseSign::plus), 1.0 / lens_phase(ctx, 1, c)));
            CHECK(phase_exact(ctx, Region{.gleam2 = 3}, c).evaluate(ctx) == phase(ctx, Region{.gleam2 = 3}, c));
        }
        const Complex i = ctx.sqrt_minus_one();
        CHECK(close(phase(ctx, Region{.gleam2 = 1}, 1), 1.0 / (i * ctx.s_power(3))));
    }
}

TEST_CASE("state sum terms") {
    const RootContext ctx(6);
    for (int n = -3; n <= 3; ++n)
        for (int a = 0; a <= 4; ++a) {
            const Complex want = delta_at(ctx, a) * delta_at(ctx, a) * lens_phase(ctx, n, a);
            CHECK(close(state_sum_term(ctx, sphere(2 * n), {a}), want));
            CHECK(close(state_sum_term_exact(ctx, sphere(2 * n), {a}).evaluate(ctx), want));
        }
    for (int g = 0; g <= 3; ++g)
        for (int a = 0; a <= 4; ++a)
            CHECK(close(state_sum_term(ctx, closed_surface(g, 0), {a}), ipow(delta_at(ctx, a), 2 - 2 * g)));

    // Circle edge: no theta factor.
    const Shadow disks = three_disks(1, 0, -1);
    for (const auto &xi : enumerate_colorings(ctx, disks)) {
        Complex want = 1.0;
        const int gl[3] = {1, 0, -1};
        for (int k = 0; k < 3; ++k)
            want *= delta_at(ctx, xi[k]) * lens_phase(ctx, gl[k], xi[k]);
        CHECK(close(state_sum_term(ctx, disks, xi), want));
    }

    // Boundary factors: theta at each boundary vertex, Delta per arc.
    const Shadow book = theta_book(2, 1, 3);
    const auto th = recoupling::theta_oracle(ctx, {2, 1, 3}).evaluate(ctx);
    CHECK(close(state_sum_term(ctx, book, {2, 1, 3}), th));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Shadow s = checks::random_shadow(rng, 5);
        if (!s.boundary_edges.empty())
            continue;
        CHECK(state_sum_term_exact(ctx, s, Coloring(s.regions.size(), 0)) == arith::Fraction(1));
    }
}

TEST_CASE("state sum") {
    const RootContext ctx(5);
    Complex four = 0.0;
    for (int a = 0; a <= 3; ++a)
        four += delta_at(ctx, a) * delta_at(ctx, a);
    const auto z = state_sum(ctx, sphere(0));
    CHECK(close(z.value, four));
    CHECK(z.colorings == 4);
    for (int r = 3; r <= 8; ++r) {
        const RootContext c(r);
        for (int n = -4; n <= 4; ++n)
            CHECK(close(state_sum(c, sphere(2 * n)).value, sphere_sum(c, n)));
    }
    const auto empty = state_sum(ctx, Shadow{});
    CHECK(empty.value == Complex(1.0));
    CHECK(empty.colorings == 1);

    // Equal to the sum of the exact terms, however it is partitioned.
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const int r = 3 + i % 4;
        const RootContext c(r);
        const Shadow s = checks::random_shadow(rng, r);
        Complex exact = 0.0;
        for (const auto &xi : enumerate_colorings(c, s))
            exact += state_sum_term_exact(c, s, xi).evaluate(c);
        const auto one = state_sum(c, s);
        const auto four_jobs = state_sum(c, s, {.jobs = 4});
        CHECK(close(one.value, exact, 1e-8));
        CHECK(one.value == four_jobs.value);
        CHECK(one.colorings == four_jobs.colorings);
    }
}

TEST_CASE("shadow formula") {
    for (int r = 3; r <= 9; ++r) {
        const RootContext ctx(r);
        const auto inv = invariant_from_shadow(ctx, sphere(0));
        CHECK(close(inv.value, 1.0));
        CHECK(inv.sigma == 0);
        CHECK(inv.chi == 2);

        const Complex kappa = recoupling::omega_unknot(ctx, 1);
        const Complex eta = arith::eta(ctx);
        for (int n = -4; n <= 4; ++n) {
            const int sg = (n > 0) - (n < 0);
            const auto got = invariant_from_shadow(ctx, sphere(2 * n));
            CHECK(got.sigma == sg);
            CHECK(close(got.value, ipow(kappa, -sg) * eta * eta * sphere_sum(ctx, n)));
        }
        for (int g = 0; g <= 3; ++g) {
            Complex sum = 0.0;
            for (int a = 0; a <= r - 2; ++a)
                sum += ipow(delta_at(ctx, a), 2 - 2 * g);
            CHECK(close(invariant_from_shadow(ctx, closed_surface(g, 0)).value, ipow(eta, 2 - 2 * g) * sum));
        }
        // Shadows of graphs in S^3: eta times the bracket.
        for (int c = 0; c <= r - 2; ++c)
            CHECK(close(invariant_from_shadow(ctx, colored_disk(c, 0)).value, eta * delta_at(ctx, c)));
        for (int a = 0; a <= r - 2 && r <= 6; ++a)
            for (int b = 0; b <= r - 2; ++b)
                for (int c = 0; c <= r - 2; ++c)
                    if (recoupling::is_q_admissible(ctx, {a, b, c}))
                        CHECK(close(invariant_from_shadow(ctx, theta_book(a, b, c)).value,
                                    eta * recoupling::theta_oracle(ctx, {a, b, c}).evaluate(ctx)));
    }

    const RootContext ctx(5);
    Shadow s = sphere(2);
    s.regions[0].orientable.reset();
    CHECK_THROWS_AS(invariant_from_shadow(ctx, s), ValidationError);
    s.sigma = -1;
    CHECK(invariant_from_shadow(ctx, s).sigma == -1);
    CHECK(invariant_from_shadow(ctx, s, 3).sigma == 3);
}

TEST_CASE("second homology") {
    const auto sph = homology_h2(sphere(4));
    REQUIRE(sph.size() == 1);
    CHECK(sph[0] == Cycle{1});
    CHECK(homology_h2(Shadow{}).empty());
    CHECK(homology_h2(colored_disk(1, 0)).empty());
    CHECK(homology_h2(theta_book(1, 1, 2)).empty());

    // Two disks along a circle, the third slot on the sphere they form.
    Shadow two;
    two.regions = {{.id = 1, .chi = 1, .orientable = true}, {.id = 2, .chi = 1, .orientable = true},
                   {.id = 3, .chi = 2, .orientable = true}};
    two.edges.push_back({.id = 1, .chi = 0, .regions = {1, 2, 3}, .signs = std::array<int, 3>{1, -1, 0}});
    const auto h = homology_h2(two);
    CHECK(h.size() == 2);

    // Against an independent rank computation on random incidence data.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Shadow s;
        const int n = 1 + t % 5;
        for (int i = 0; i < n; ++i)
            s.regions.push_back({.id = i + 1, .chi = 1, .orientable = true});
        const int ne = t % 4;
        std::vector<std::vector<double>> m;
        for (int e = 0; e < ne; ++e) {
            InternalEdge edge{.id = e + 1};
            std::array<int, 3> sg{};
            std::vector<double> row(n, 0.0);
            for (int k = 0; k < 3; ++k) {
                edge.regions[k] = 1 + static_cast<int>(rng() % n);
                sg[k] = static_cast<int>(rng() % 5) - 2;
                row[edge.regions[k] - 1] += sg[k];
            }
            edge.signs = sg;
            s.edges.push_back(edge);
            m.push_back(row);
        }
        const auto basis = homology_h2(s);
        CHECK(static_cast<int>(basis.size()) == n - rank(m));
        for (const auto &b : basis)
            for (const auto &row : m) {
                double dot = 0;
                for (int i = 0; i < n; ++i)
                    dot += row[i] * static_cast<double>(b[i]);
                CHECK(dot == 0.0);
            }
        std::vector<std::vector<double>> bm;
        for (const auto &b : basis)
            bm.emplace_back(b.begin(), b.end());
        CHECK(rank(bm) == static_cast<int>(basis.size()));
    }

    Shadow no_signs = three_disks(0, 0, 0);
    no_signs.edges[0].signs.reset();
    CHECK_THROWS_AS(homology_h2(no_signs), ValidationError);
}

TEST_CASE("bilinear form and signature") {
    for (int n = -5; n <= 5; ++n) {
        const Shadow s = sphere(2 * n);
        for (int k = -3; k <= 3; ++k)
            for (int h = -3; h <= 3; ++h)
                CHECK(bilinear_form(s, {k}, {h}) == arith::Rational(k * h * n));
        CHECK(bilinear_form(s, {2}, {0}) == arith::Rational(0));
        CHECK(signature(s) == (n > 0) - (n < 0));
        CHECK(arith::signature(std::vector<std::vector<long long>>{{n}}) == (n > 0) - (n < 0));
    }
    CHECK(bilinear_form(sphere(1), {1}, {1}) == arith::Rational(1, 2));

    // Kernel of [1 1 1]: Q = [[g1+g2, -g2], [-g2, g2+g3]] up to basis change.
    const Shadow s = three_disks(1, 1, 1);
    CHECK(signature(s) == 2);
    CHECK(signature(three_disks(-1, -1, -1)) == -2);
    CHECK(signature(three_disks(1, 0, -1)) == 0);
    CHECK(signature(three_disks(0, 0, 0)) == 0);

    // Invariance under unimodular basis changes.
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Shadow d = three_disks(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3,
                                     static_cast<int>(rng() % 7) - 3);
        auto basis = homology_h2(d);
        const int sig = arith::signature(gram_matrix(d, basis));
        for (int step = 0; step < 6; ++step) {
            const int i = static_cast<int>(rng() % basis.size()), j = static_cast<int>(rng() % basis.size());
            const long long f = static_cast<long long>(rng() % 5) - 2;
            if (i == j)
                for (auto &x : basis[i])
                    x = -x;
            else
                for (std::size_t k = 0; k < basis[i].size(); ++k)
                    basis[i][k] += f * basis[j][k];
        }
        CHECK(arith::signature(gram_matrix(d, basis)) == sig);
    }
}

TEST_CASE("file format") {
    const std::vector<Shadow> samples = {sphere(3), closed_surface(2, -4), three_disks(1, 2, -3), colored_disk(2, 1),
                                         theta_book(1, 2, 3)};
    for (const auto &s : samples) {
        const auto text = io::dump(shadow_to_json(s));
        CHECK(shadow_from_json(io::parse_text(text)) == s);
        CHECK(io::dump(shadow_to_json(shadow_from_json(io::parse_text(text)))) == text);
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        Shadow s = checks::random_shadow(rng, 6);
        if (i % 3 == 0)
            s.sigma = i - 20;
        CHECK(shadow_from_json(io::parse_text(io::dump(shadow_to_json(s)))) == s);
    }

    auto rejects = [](const std::string &text, const std::string &what) {
        try {
            shadow_from_json(io::parse_text(text));
        } catch (const ParseError &e) {
            return std::string(e.what()).find(what) != std::string::npos;
        }
        return false;
    };
    CHECK(rejects(R"({"regions": [{"id": 1, "gleam2": 0, "chi": 2, "colour": 1}]})", "colour"));
    CHECK(rejects(R"({"regions": [], "edge": []})", "edge"));
    CHECK(rejects(R"({"regions": [{"id": 1, "gleam2": 0.5, "chi": 2}]})", "gleam2"));
    CHECK(rejects(R"({"regions": [{"id": 1, "chi": 2}]})", "gleam2"));
    CHECK(rejects(R"({"regions": [], "edges": [{"id": 1, "chi": 0, "regions": [1, 1]}]})", "regions"));
    CHECK(rejects(R"([1, 2])", "object"));
    CHECK(rejects(R"({"regions": [)", ""));
    CHECK(looks_like_shadow(io::parse_text(R"({"regions": []})")));
    CHECK_FALSE(looks_like_shadow(io::parse_text(R"({"family": "empty"})")));
}

TEST_CASE("random shadow properties") {
    const auto res = checks::check_shadow_properties(150, 2024);
    INFO(res.first_failure);
    CHECK(res.passed());
    CHECK(res.cases >= 300);
}
