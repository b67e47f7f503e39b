#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "shadowsum/arith/fraction.hpp"

namespace shadowsum::tl {

using arith::Fraction;
using arith::LaurentPoly;
using arith::RootContext;

// Boundary points are numbered counterclockwise: bottom positions 0..n-1
// left to right are points 0..n-1, top positions 0..n-1 left to right are
// points 2n-1..n.
struct TLDiagram {
    int n = 0;
    std::vector<std::uint8_t> matching;
    int loops = 0;

    static TLDiagram identity(int n);
    // e_i for 1 <= i <= n-1: caps bottom positions i-1, i and top positions i-1, i.
    static TLDiagram generator(int n, int i);

    int bottom(int pos) const { return pos; }
    int top(int pos) const { return 2 * n - 1 - pos; }
    bool is_valid() const;
    TLDiagram mirrored() const;
    // Adds identity strands on the right up to m strands.
    TLDiagram embedded(int m) const;

    friend bool operator==(const TLDiagram &, const TLDiagram &) = default;
    friend auto operator<=>(const TLDiagram &, const TLDiagram &) = default;
};

// Stacks y on top of x; closed loops are counted in the result's loops field.
TLDiagram compose(const TLDiagram &x, const TLDiagram &y);

// Number of loops in the standard closure joining top and bottom position p.
int closure_loops(const TLDiagram &d);

class TLElement {
public:
    using Key = std::vector<std::uint8_t>;

    explicit TLElement(int n = 0) : n_(n) {}
    static TLElement from_diagram(const TLDiagram &d, Fraction coeff = Fraction(1));

    int n() const { return n_; }
    const std::map<Key, Fraction> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Fraction coefficient(const TLDiagram &d) const;
    void add(const TLDiagram &d, const Fraction &coeff);

    TLElement &operator+=(const TLElement &o);
    TLElement &operator-=(const TLElement &o);
    TLElement operator*(const Fraction &c) const;
    friend TLElement operator+(TLElement a, const TLElement &b) { return a += b; }
    friend TLElement operator-(TLElement a, const TLElement &b) { return a -= b; }
    friend bool operator==(const TLElement &a, const TLElement &b);

    bool is_zero() const { return terms_.empty(); }
    TLElement mirrored() const;
    TLElement embedded(int m) const;

private:
    int n_;
    std::map<Key, Fraction> terms_;
};

TLElement tl_compose(const TLElement &x, const TLElement &y);
Fraction tl_trace(const TLElement &x);

// Loop value delta^k as an exact scalar.
Fraction loop_power(int k);

// f^(n) for 0 <= n <= r-1. The coefficients do not depend on the root, so the
// returned element is shared across contexts.
const TLElement &jones_wenzl(const RootContext &ctx, int n);
// Same projector without the range check against a root.
const TLElement &jones_wenzl_generic(int n);

} // namespace shadowsum::tl
