#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "shadowsum/arith/constants.hpp"
#include "shadowsum/arith/cyclotomic.hpp"
#include "shadowsum/arith/fraction.hpp"
#include "shadowsum/error.hpp"

using namespace shadowsum;
using namespace shadowsum::arith;

namespace {

LaurentPoly random_poly(std::mt19937 &rng, int span, int terms) {
    std::uniform_int_distribution<int> exp(-span, span);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::map<int, LaurentPoly::Coeff> m;
    for (int i = 0; i < terms; ++i)
        m[exp(rng)] += coef(rng);
    return LaurentPoly::from_terms(m);
}

// Direct numeric evaluation, independent of the folding tables.
Complex naive_eval(const LaurentPoly &p, int r, int m) {
    Complex sum = 0.0;
    for (const auto &[e, c] : p.terms())
        sum += double(c) * std::polar(1.0, std::numbers::pi * m * e / (4.0 * r));
    return sum;
}

Complex numeric_qint(const RootContext &ctx, int n) {
    return (std::pow(ctx.A(), 2 * n) - std::pow(ctx.A(), -2 * n)) /
           (ctx.A() * ctx.A() - 1.0 / (ctx.A() * ctx.A()));
}

bool close(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) < tol; }

} // namespace

TEST_CASE("root context validation") {
    CHECK_THROWS_AS(RootContext(2), DomainError);
    CHECK_THROWS_AS(RootContext(5, 2), DomainError);
    CHECK_THROWS_AS(RootContext(5, 5), DomainError);
    CHECK_NOTHROW(RootContext(5, 3));
    RootContext ctx(7, 3, 1, -1);
    CHECK(ctx.sqrt_a_exponent() == 3 + 28);
    CHECK(close(ctx.sqrt_a() * ctx.sqrt_a(), ctx.A()));
}

TEST_CASE("A is a primitive 4r-th root") {
    for (int r = 3; r <= 9; ++r)
        for (int k : {1, 3, 5, 7}) {
            if (std::gcd(k, 4 * r) != 1)
                continue;
            RootContext ctx(r, k);
            CHECK(close(std::pow(ctx.A(), 4 * r), 1.0));
            for (int m = 1; m < 4 * r; ++m)
                CHECK(std::abs(ctx.s_power(2 * m) - 1.0) > 1e-6);
        }
}

TEST_CASE("sqrt(-1) squares to -1 for both signs") {
    for (int r = 3; r <= 8; ++r)
        for (int sigma : {1, -1}) {
            RootContext ctx(r, 1, 0, sigma);
            CHECK(close(ctx.sqrt_minus_one() * ctx.sqrt_minus_one(), -1.0));
        }
    CHECK(close(RootContext(5).sqrt_minus_one(), Complex(0, 1)));
}

TEST_CASE("ring laws on random Laurent polynomials") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        auto p = random_poly(rng, 30, 6), q = random_poly(rng, 30, 6), w = random_poly(rng, 30, 6);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + w == p + (q + w));
        CHECK((p * q) * w == p * (q * w));
        CHECK(p * (q + w) == p * q + p * w);
        CHECK(p - p == LaurentPoly());
        CHECK(p * LaurentPoly(1) == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        const int r = 3 + iter % 8;
        RootContext ctx(r, 1, iter % 2);
        auto p = random_poly(rng, 200, 8), q = random_poly(rng, 200, 8);
        CHECK(close((p * q).evaluate(ctx), p.evaluate(ctx) * q.evaluate(ctx), 1e-7));
        CHECK(close((p + q).evaluate(ctx), p.evaluate(ctx) + q.evaluate(ctx)));
        CHECK(close(p.evaluate(ctx), naive_eval(p, r, ctx.sqrt_a_exponent()), 1e-8));
    }
}

TEST_CASE("exact division") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        auto p = random_poly(rng, 10, 5);
        auto d = cyclotomic_in_q(1 + iter % 12).shifted(iter % 5 - 2);
        auto q = (p * d).divide_exact(d);
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
    CHECK_FALSE(LaurentPoly::monomial(1, 3).divide_exact(cyclotomic(2)).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == LaurentPoly::from_terms({{1, 1}, {0, -1}}));
    CHECK(cyclotomic(12) == LaurentPoly::from_terms({{4, 1}, {2, -1}, {0, 1}}));
    CHECK(cyclotomic(9).high() == euler_phi(9));
    for (int d = 1; d <= 40; ++d)
        CHECK(cyclotomic(d).high() == euler_phi(d));
}

TEST_CASE("quantum loop") {
    CHECK(quantum_loop(RootContext(3)) == LaurentPoly::from_terms({{4, -1}, {-4, -1}}));
    CHECK(quantum_loop(RootContext(5)).evaluate(RootContext(5)).real() ==
          doctest::Approx(-1.618034).epsilon(1e-6));
    CHECK(close(quantum_loop(RootContext(3)).evaluate(RootContext(3)), -1.0));
}

TEST_CASE("quantum integers") {
    for (int r = 3; r <= 9; ++r) {
        RootContext ctx(r);
        for (int n = 1; n < r; ++n)
            CHECK(close(Fraction::quantum_integer(n).evaluate(ctx), numeric_qint(ctx, n)));
        CHECK(Fraction::quantum_integer(r).vanishes_at(ctx));
        CHECK_FALSE(Fraction::quantum_integer(r - 1).vanishes_at(ctx));
    }
    // [2] = A^2 + A^-2
    CHECK(Fraction::quantum_integer(2) == Fraction(LaurentPoly::from_terms({{4, 1}, {-4, 1}})));
}

TEST_CASE("fraction arithmetic") {
    const Fraction q2 = Fraction::quantum_integer(2), q3 = Fraction::quantum_integer(3);
    const Fraction x = q2 / q3;
    CHECK(x * q3 == q2);
    CHECK(x + x == Fraction(2) * x);
    CHECK((x - x).is_zero());
    CHECK(x.inverse() * x == Fraction(1));
    CHECK(q3.inverse().inverse() == q3);
    CHECK(Fraction::quantum_factorial(4) / Fraction::quantum_factorial(3) == Fraction::quantum_integer(4));
    CHECK_THROWS_AS(Fraction(LaurentPoly(2)).inverse(), DomainError);
    CHECK_THROWS_AS(Fraction().inverse(), DomainError);

    std::mt19937 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        RootContext ctx(7);
        Fraction a = Fraction(random_poly(rng, 12, 4)) / Fraction::quantum_integer(1 + iter % 6);
        Fraction b = Fraction(random_poly(rng, 12, 4)) / Fraction::quantum_integer(2 + iter % 5);
        CHECK(close((a * b).evaluate(ctx), a.evaluate(ctx) * b.evaluate(ctx), 1e-7));
        CHECK(close((a + b).evaluate(ctx), a.evaluate(ctx) + b.evaluate(ctx), 1e-7));
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("singular denominators are reported") {
    RootContext ctx(4);
    const Fraction bad = Fraction(1) / Fraction::quantum_integer(4);
    CHECK(bad.singular_at(ctx));
    CHECK_THROWS_AS(bad.evaluate(ctx), DomainError);
    CHECK_NOTHROW(bad.evaluate(RootContext(5)));
}

TEST_CASE("exact equality at the root") {
    RootContext ctx(5);
    // A^{4r} = 1 at the root but not generically.
    const Fraction one(1), a20(a_power(20));
    CHECK_FALSE(one == a20);
    CHECK(one.equals_at(ctx, a20));
    CHECK_FALSE(one.equals_at(RootContext(6), a20));
}

TEST_CASE("eta") {
    CHECK(eta(RootContext(3)).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(eta(RootContext(4)).real() == doctest::Approx(0.5).epsilon(1e-12));
    for (int r = 3; r <= 12; ++r)
        for (int k : {1, 3, 5, 7, 9, 11}) {
            if (std::gcd(k, 4 * r) != 1)
                continue;
            RootContext ctx(r, k);
            Complex sum = 0.0;
            for (int n = 0; n <= r - 2; ++n) {
                const Complex d = (n % 2 ? -1.0 : 1.0) * numeric_qint(ctx, n + 1);
                sum += d * d;
            }
            CHECK(close(std::pow(eta(ctx), -2) - sum, 0.0));
            CHECK(eta(ctx).real() > 0);
        }
}

TEST_CASE("Gauss sum at k = 1") {
    for (int r = 3; r <= 12; ++r) {
        RootContext ctx(r);
        CHECK(close(gauss_sum(ctx), 2.0 * std::sqrt(2.0 * r) * std::polar(1.0, std::numbers::pi / 4)));
    }
}

TEST_CASE("kappa closed forms agree with each other") {
    const Complex k3 = kappa(RootContext(3));
    CHECK(std::abs(k3) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    for (int r = 3; r <= 12; ++r)
        CHECK(close(kappa(RootContext(r)), kappa_principal_closed_form(r)));
}
