#pragma once

#include "shadowsum/tl/builder.hpp"

// Closed diagrams used to test local skein identities with the bracket.
namespace shadowsum::checks {

// Colour-n ring around two parallel strands a, b closed into nested circles.
tl::FramedGraphDiagram ring_around_two(int ring, int a, int b);
// Colour-n ring around the three edges of the theta graph (a, b, c).
tl::FramedGraphDiagram ring_around_theta(int ring, int a, int b, int c);
// Edge a opens into a (b, c) bubble that closes onto a2; a and a2 are then
// joined through a second bubble (e, f).
tl::FramedGraphDiagram double_bubble(int a, int a2, int b, int c, int e, int f);
// Triangle with inner edges a, d, f, vertices (a,b,f), (c,d,f), (a,d,e) and
// legs b, c, e; closed by a single vertex on the legs, or by a second
// triangle with inner edges a2, d2, f2.
tl::FramedGraphDiagram triangle_vertex_closure(int a, int b, int c, int d, int e, int f);
tl::FramedGraphDiagram triangle_prism(int a, int b, int c, int d, int e, int f, int a2, int d2, int f2);
// Theta graph (a, b, c) with a kink of the given sign on edge b.
tl::FramedGraphDiagram theta_with_kink(int a, int b, int c, bool positive);

// Two-component 0-framed unlink, and the diagram after sliding the first
// component over the second along a band crossing it twice. Arc tags give
// the component (0 or 1).
tl::SliceBuilder::Result unlink2(int c0, int c1);
tl::SliceBuilder::Result unlink2_slid(int c0, int c1);

} // namespace shadowsum::checks
