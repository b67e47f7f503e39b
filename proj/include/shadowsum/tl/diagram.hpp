#pragma once

#include <array>
#include <string>
#include <vector>

namespace shadowsum::tl {

// One end of an arc: side 0 is the tail, side 1 the head.
struct ArcEnd {
    int arc = -1;
    int side = 0;
    friend bool operator==(const ArcEnd &, const ArcEnd &) = default;
};

struct Arc {
    int color = 1;
    // Framing offset in half twists relative to the blackboard framing.
    int framing2 = 0;
    // A closed arc is a circle with no crossings or vertices on it.
    bool closed = false;
};

// Ends listed counterclockwise; ends[0] and ends[2] belong to the strand that
// passes under, ends[1] and ends[3] to the one passing over.
struct Crossing {
    std::array<ArcEnd, 4> ends;
};

// Trivalent vertex, ends listed counterclockwise.
struct Vertex {
    std::array<ArcEnd, 3> ends;
};

// Where an arc end is attached.
struct EndSite {
    enum Kind { None, AtCrossing, AtVertex } kind = None;
    int node = -1;
    int slot = -1;
};

// A maximal chain of arcs joined through crossings. Open chains run from a
// vertex slot to a vertex slot; closed chains are link components.
struct Chain {
    std::vector<int> arcs;
    // Per arc: true when the chain traverses it from tail to head.
    std::vector<bool> forward;
    bool closed = false;
};

class FramedGraphDiagram {
public:
    std::vector<Arc> arcs;
    std::vector<Crossing> crossings;
    std::vector<Vertex> vertices;

    EndSite site(ArcEnd e) const;
    // Describes every violated invariant; empty when the diagram is valid.
    std::vector<std::string> validate() const;
    // Throws ValidationError listing the violations.
    void check() const;

    std::vector<Chain> chains() const;
    // Chains sharing no arcs with vertices, i.e. the link components.
    bool has_vertices() const { return !vertices.empty(); }
    // +1 or -1 from the arc orientations; needs the chains through the
    // crossing to be consistently oriented.
    int crossing_sign(int c) const;
    bool orientations_consistent() const;
    int writhe() const;
    // Index of the chain containing each arc.
    std::vector<int> chain_of_arc() const;
    // Reverses every arc of a chain.
    void reverse_chain(const Chain &chain);

private:
    void build_sites(std::vector<EndSite> &sites) const;
};

} // namespace shadowsum::tl
