#include <random>

#include "doctest.h"
#include "shadowsum/arith/constants.hpp"
#include "shadowsum/error.hpp"
#include "shadowsum/tl/bracket.hpp"
#include "shadowsum/tl/builder.hpp"
#include "shadowsum/tl/temperley_lieb.hpp"

using namespace shadowsum;
using namespace shadowsum::tl;
using arith::a_power;
using arith::LaurentPoly;

namespace {

const Fraction delta(arith::quantum_loop(RootContext(3)));

TLElement gen(int n, int i) { return TLElement::from_diagram(TLDiagram::generator(n, i)); }
TLElement one(int n) { return TLElement::from_diagram(TLDiagram::identity(n)); }

// Delta_n = (-1)^n [n+1], computed without the TL algebra.
Fraction delta_closed(int n) {
    Fraction q = Fraction::quantum_integer(n + 1);
    return n % 2 ? -q : q;
}

Fraction poly(std::map<int, LaurentPoly::Coeff> terms_in_a) {
    std::map<int, LaurentPoly::Coeff> s;
    for (auto [e, c] : terms_in_a)
        s[2 * e] = c;
    return Fraction(LaurentPoly::from_terms(s));
}

const BracketOptions big{{400, 14}, false};

} // namespace

TEST_CASE("diagram composition") {
    CHECK(tl_compose(gen(2, 1), gen(2, 1)) == gen(2, 1) * delta);
    CHECK(tl_compose(tl_compose(gen(3, 1), gen(3, 2)), gen(3, 1)) == gen(3, 1));
    CHECK(tl_compose(tl_compose(gen(4, 2), gen(4, 3)), gen(4, 2)) == gen(4, 2));
    CHECK(tl_compose(gen(4, 1), gen(4, 3)) == tl_compose(gen(4, 3), gen(4, 1)));
    CHECK_THROWS_AS(tl_compose(gen(3, 1), gen(4, 1)), DomainError);
    std::mt19937 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        TLElement x = one(4) * Fraction(int(rng() % 5));
        for (int k = 0; k < 3; ++k)
            x += tl_compose(gen(4, 1 + rng() % 3), gen(4, 1 + rng() % 3)) * Fraction(int(rng() % 7) - 3);
        CHECK(tl_compose(one(4), x) == x);
        CHECK(tl_compose(x, one(4)) == x);
    }
}

TEST_CASE("diagram validity") {
    CHECK(TLDiagram::identity(5).is_valid());
    CHECK(TLDiagram::generator(5, 3).is_valid());
    TLDiagram bad = TLDiagram::identity(2);
    std::swap(bad.matching[2], bad.matching[3]);  // crossing strands
    bad.matching = {2, 3, 0, 1};
    CHECK_FALSE(bad.is_valid());
}

TEST_CASE("trace") {
    CHECK(tl_trace(one(2)) == delta * delta);
    CHECK(tl_trace(gen(2, 1)) == delta);
    CHECK(tl_trace(jones_wenzl_generic(2)) == poly({{4, 1}, {0, 1}, {-4, 1}}));
}

TEST_CASE("small projectors") {
    RootContext ctx(5);
    CHECK(jones_wenzl(ctx, 0).size() == 1);
    CHECK(jones_wenzl(ctx, 1) == one(1));
    CHECK(jones_wenzl(ctx, 2) == one(2) - gen(2, 1) * delta.inverse());
    CHECK_THROWS_AS(jones_wenzl(ctx, 5), DomainError);
    CHECK_THROWS_AS(jones_wenzl(ctx, -1), DomainError);
}

TEST_CASE("projector properties") {
    for (int n = 1; n <= 5; ++n) {
        const TLElement &f = jones_wenzl_generic(n);
        CHECK(tl_compose(f, f) == f);
        CHECK(f.mirrored() == f);
        for (int i = 1; i < n; ++i) {
            CHECK(tl_compose(f, gen(n, i)).is_zero());
            CHECK(tl_compose(gen(n, i), f).is_zero());
        }
        for (int m = n; m <= 5; ++m)
            CHECK(tl_compose(f.embedded(m), jones_wenzl_generic(m)) == jones_wenzl_generic(m));
        CHECK(tl_trace(f) == delta_closed(n));
    }
}

TEST_CASE("unknots") {
    RootContext ctx(7);
    CHECK(bracket(ctx, unknot_diagram(1)) == delta);
    CHECK(bracket(ctx, unknot_diagram(1, 2)) == delta * Fraction(LaurentPoly::monomial(-1, 6)));
    for (int n = 0; n <= 4; ++n)
        CHECK(bracket(ctx, unknot_diagram(n)) == delta_closed(n));
    CHECK(bracket(ctx, unknot_diagram(2, 2)) == delta_closed(2) * Fraction(a_power(8)));
    CHECK_THROWS_AS(bracket(ctx, unknot_diagram(6)), DomainError);
}

TEST_CASE("braid closures") {
    RootContext ctx(7);
    CHECK(bracket(ctx, braid_closure(2, {1}).diagram) == delta * poly({{3, -1}}));
    CHECK(bracket(ctx, braid_closure(2, {-1}).diagram) == delta * poly({{-3, -1}}));
    const auto trefoil = braid_closure(2, {1, 1, 1}).diagram;
    CHECK(trefoil.writhe() == 3);
    CHECK(bracket(ctx, trefoil) == delta * poly({{5, -1}, {-3, -1}, {-7, 1}}));
    const auto hopf = braid_closure(2, {1, 1}).diagram;
    CHECK(bracket(ctx, hopf) == delta * poly({{4, -1}, {-4, -1}}));
}

TEST_CASE("Reidemeister moves") {
    RootContext ctx(7);
    const auto two_circles = braid_closure(2, {}).diagram;
    CHECK(bracket(ctx, braid_closure(2, {1, -1}).diagram) == bracket(ctx, two_circles));
    CHECK(bracket(ctx, braid_closure(3, {1, 2, 1}).diagram) ==
          bracket(ctx, braid_closure(3, {2, 1, 2}).diagram));
    CHECK(bracket(ctx, braid_closure(3, {1, -2, 1, 2, -1}).diagram) ==
          bracket(ctx, braid_closure(3, {-2, 1, 2, -1, 1}).diagram));
    // Coloured strands.
    CHECK(bracket(ctx, braid_closure(3, {1, 2, 1}, {2, 3}).diagram, big) ==
          bracket(ctx, braid_closure(3, {2, 1, 2}, {2, 3}).diagram, big));
    CHECK(bracket(ctx, braid_closure(2, {1, -1}, {2, 3}).diagram, big) ==
          bracket(ctx, braid_closure(2, {}, {2, 3}).diagram, big));
}

TEST_CASE("half twists compose to a full twist") {
    RootContext ctx(7, 1, 0, 1), other(7, 3, 1, -1);
    for (int n = 0; n <= 5; ++n) {
        CHECK(arith::vanishes_at(ctx, twist_factor(ctx, n, 1) * twist_factor(ctx, n, 1) -
                                          (n % 2 ? -a_power(n * n + 2 * n) : a_power(n * n + 2 * n))));
        CHECK(arith::vanishes_at(other, twist_factor(other, n, 1) * twist_factor(other, n, 1) -
                                            twist_factor(other, n, 2)));
        CHECK(bracket(ctx, unknot_diagram(n, 2))
                  .equals_at(ctx, bracket(ctx, unknot_diagram(n, 1)) * Fraction(twist_factor(ctx, n, 1))));
    }
    // A kink is a full twist.
    for (int n = 1; n <= 3; ++n) {
        SliceBuilder b;
        b.cup(0, n).cup(1, n).cross(0, true).cap(1).cap(0);
        const auto kink = b.finish().diagram;
        CHECK(kink.writhe() == 1);
        CHECK(bracket(ctx, kink, big) == bracket(ctx, unknot_diagram(n, 2)));
        SliceBuilder c;
        c.cup(0, n).cup(1, n).cross(0, false).cap(1).cap(0);
        CHECK(bracket(ctx, c.finish().diagram, big) == bracket(ctx, unknot_diagram(n, -2)));
    }
}

TEST_CASE("graphs") {
    RootContext ctx(7);
    CHECK(bracket(ctx, theta_diagram(0, 0, 0)) == Fraction(1));
    for (int a = 1; a <= 3; ++a)
        CHECK(bracket(ctx, theta_diagram(a, a, 0)) == delta_closed(a));
    CHECK(bracket(ctx, theta_diagram(1, 1, 2)) == bracket(ctx, theta_diagram(2, 1, 1)));
    CHECK(bracket(ctx, tet_diagram(0, 0, 0, 0, 0, 0)) == Fraction(1));
    CHECK(bracket(ctx, tet_diagram(1, 1, 2, 1, 1, 0)) == bracket(ctx, theta_diagram(1, 1, 2)));
    CHECK(bracket(ctx, tet_diagram(2, 1, 1, 1, 2, 0)) == bracket(ctx, theta_diagram(2, 1, 1)));
}

TEST_CASE("diagram validation") {
    auto theta = theta_diagram(1, 1, 2);
    CHECK(theta.validate().empty());
    auto twisted = theta;
    std::swap(twisted.vertices[0].ends[0], twisted.vertices[0].ends[1]);
    CHECK_FALSE(twisted.validate().empty());
    auto bad = theta;
    bad.arcs[0].color = 3;
    CHECK_FALSE(bad.validate().empty());
    auto dangling = theta;
    dangling.vertices[1].ends[0].arc = 99;
    CHECK_FALSE(dangling.validate().empty());
}

TEST_CASE("budget") {
    RootContext ctx(9);
    const auto trefoil3 = braid_closure(2, {1, 1, 1}, {3}).diagram;
    CHECK_THROWS_AS(bracket(ctx, trefoil3), BudgetExceeded);
    CHECK_NOTHROW(bracket(ctx, trefoil3, BracketOptions{{27, 14}, false}));
    CHECK_THROWS_AS(bracket(ctx, unknot_diagram(5), BracketOptions{{24, 4}, false}), BudgetExceeded);
}

TEST_CASE("numeric and exact brackets agree") {
    for (int r : {5, 7}) {
        RootContext ctx(r, r == 7 ? 3 : 1);
        const auto d = braid_closure(3, {1, -2, 1, 1}, {2, 1}).diagram;
        const Complex x = bracket(ctx, d, big).evaluate(ctx), y = bracket_numeric(ctx, d, big);
        CHECK(std::abs(x - y) < 1e-9);
    }
}
