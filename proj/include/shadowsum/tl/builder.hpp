#pragma once

#include <vector>

#include "shadowsum/tl/diagram.hpp"

namespace shadowsum::tl {

// Builds planar diagrams slice by slice from bottom to top. Strands occupy
// positions 0..width()-1 left to right; every operation acts on adjacent
// positions, so the result is planar by construction.
class SliceBuilder {
public:
    struct Result {
        FramedGraphDiagram diagram;
        // Tag of the strand each arc came from (-1 when untagged).
        std::vector<int> arc_tags;
    };

    int width() const { return static_cast<int>(strands_.size()); }

    // New strand pair at positions i, i+1 joined below.
    SliceBuilder &cup(int i, int color, int tag = -1);
    // Joins the strands at positions i and i+1 above.
    SliceBuilder &cap(int i);
    // Crossing of positions i and i+1; when positive the strand coming from
    // position i passes over.
    SliceBuilder &cross(int i, bool positive);
    // Strand at i becomes two strands at i, i+1 through a trivalent vertex.
    SliceBuilder &split(int i, int left_color, int right_color, int left_tag = -1, int right_tag = -1);
    // Strands at i, i+1 meet in a trivalent vertex and leave as one strand.
    SliceBuilder &merge(int i, int color, int tag = -1);
    // Adds framing2 half twists to the strand at i.
    SliceBuilder &twist(int i, int framing2);

    Result finish() const;

private:
    struct Strand {
        int point;
        int color;
        int framing2;
        int tag;
    };
    struct Point {
        int node = -1;  // crossing index, or vertex index + kVertexBase
        int slot = -1;
        bool upper = false;
    };
    struct Link {
        int a, b;
        int color;
        int framing2;
        int tag;
        bool internal;  // cup junction
    };
    static constexpr int kVertexBase = 1 << 20;

    int new_point(int node, int slot, bool upper);
    void check_position(int i, int span) const;
    void end_strand(const Strand &s, int point);

    std::vector<Strand> strands_;
    std::vector<Point> points_;
    std::vector<Link> links_;
    int crossings_ = 0;
    int vertices_ = 0;
};

// Colour-c unknot with the given framing offset.
FramedGraphDiagram unknot_diagram(int color, int framing2 = 0);
// Planar theta graph with edge colours a, b, c.
FramedGraphDiagram theta_diagram(int a, int b, int c);
// Planar tetrahedron with vertex triples (a,b,c), (a,e,f), (b,f,d), (c,e,d).
FramedGraphDiagram tet_diagram(int a, int b, int c, int d, int e, int f);
// Closure of a braid word on `strands` strands; generator +i / -i is
// sigma_i^{+-1} acting on positions i-1, i. Components are numbered by their
// lowest starting position and coloured by component_colors (or 1).
SliceBuilder::Result braid_closure(int strands, const std::vector<int> &word,
                                   const std::vector<int> &component_colors = {});

} // namespace shadowsum::tl
