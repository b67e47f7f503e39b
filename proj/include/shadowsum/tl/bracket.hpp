#pragma once

#include "shadowsum/tl/network.hpp"

namespace shadowsum::tl {

struct BracketOptions {
    Budget budget;
    bool mirror = false;
};

// ((sqrt(-1))^n A^{(n^2+2n)/2})^{framing2}: the factor for framing2 positive
// half twists on a colour-n band. Integer twists use (-1)^n so the result
// does not depend on the choice of sqrt(-1).
arith::LaurentPoly twist_factor(const RootContext &ctx, int n, int framing2);

// Product of twist factors over all arcs of the diagram.
arith::LaurentPoly framing_factor(const RootContext &ctx, const FramedGraphDiagram &d);

// Kauffman bracket of the coloured framed diagram. Colours must be at most
// r - 2.
Fraction bracket(const RootContext &ctx, const FramedGraphDiagram &d, const BracketOptions &opts = {});
Complex bracket_numeric(const RootContext &ctx, const FramedGraphDiagram &d,
                        const BracketOptions &opts = {});

// Exact bracket with no root attached; framing offsets must be whole twists.
Fraction bracket_generic(const FramedGraphDiagram &d, const BracketOptions &opts = {});

} // namespace shadowsum::tl
