#include "shadowsum/checks/diagrams.hpp"

namespace shadowsum::checks {

using tl::FramedGraphDiagram;
using tl::SliceBuilder;

namespace {

// Passes the strand at position `from` leftwards over the strands at
// positions to..from-1 and back under them.
void encircle(SliceBuilder &b, int from, int to) {
    for (int i = from - 1; i >= to; --i)
        b.cross(i, false);
    for (int i = to; i < from; ++i)
        b.cross(i, false);
}

} // namespace

FramedGraphDiagram ring_around_two(int ring, int a, int b) {
    SliceBuilder s;
    s.cup(0, b).cup(1, a).cup(2, ring);
    encircle(s, 2, 0);
    s.cap(2).cap(1).cap(0);
    return s.finish().diagram;
}

FramedGraphDiagram ring_around_theta(int ring, int a, int b, int c) {
    SliceBuilder s;
    s.cup(0, a).split(0, b, c).cup(3, ring);
    encircle(s, 3, 0);
    s.cap(3).merge(1, b).cap(0);
    return s.finish().diagram;
}

FramedGraphDiagram double_bubble(int a, int a2, int b, int c, int e, int f) {
    SliceBuilder s;
    s.cup(0, a).split(1, e, f).split(0, b, c).merge(0, a2).merge(1, a2).cap(0);
    return s.finish().diagram;
}

namespace {

SliceBuilder triangle(int a, int b, int c, int d, int e, int f) {
    SliceBuilder s;
    s.cup(0, a).split(1, d, e).split(0, b, f).merge(1, c);
    return s;
}

} // namespace

FramedGraphDiagram triangle_vertex_closure(int a, int b, int c, int d, int e, int f) {
    SliceBuilder s = triangle(a, b, c, d, e, f);
    s.merge(0, e).cap(0);
    return s.finish().diagram;
}

FramedGraphDiagram triangle_prism(int a, int b, int c, int d, int e, int f, int a2, int d2, int f2) {
    SliceBuilder s = triangle(a, b, c, d, e, f);
    s.split(1, f2, d2).merge(0, a2).merge(1, a2).cap(0);
    return s.finish().diagram;
}

FramedGraphDiagram theta_with_kink(int a, int b, int c, bool positive) {
    SliceBuilder s;
    s.cup(0, a).split(0, b, c).cup(1, b).cross(0, positive).cap(1).merge(1, b).cap(0);
    return s.finish().diagram;
}

SliceBuilder::Result unlink2(int c0, int c1) {
    SliceBuilder s;
    s.cup(0, c1, 1).cup(1, c0, 0).cap(1).cap(0);
    return s.finish();
}

SliceBuilder::Result unlink2_slid(int c0, int c1) {
    // The first component runs inside the second, parallel to it, and leaves
    // through a band passing over the second component.
    SliceBuilder s;
    s.cup(0, c1, 1).cup(1, c0, 0).cross(2, true).cross(2, false).cap(1).cap(0);
    return s.finish();
}

} // namespace shadowsum::checks
