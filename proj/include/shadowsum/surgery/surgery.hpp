#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shadowsum/arith/signature.hpp"
#include "shadowsum/tl/builder.hpp"
#include "shadowsum/tl/network.hpp"

namespace shadowsum::surgery {

using arith::Complex;
using arith::Fraction;
using arith::RootContext;

enum class Role { omega, color };

// A surgery component (role omega) or an edge of the coloured graph G'
// (role color). framing2 is twice the framing relative to the blackboard
// framing of the diagram.
struct Component {
    int id = 0;
    int framing2 = 0;
    Role role = Role::omega;
    std::optional<int> color;

    bool operator==(const Component &) const = default;
};

struct LinkArc {
    int id = 0;
    int component = 0;

    bool operator==(const LinkArc &) const = default;
};

// Arc ends are signed arc ids: +a is the head of arc a, -a its tail. Around
// a crossing the ends read under[0], over[0], under[1], over[1]
// counterclockwise; around a vertex, ends[0..2] counterclockwise.
struct LinkCrossing {
    int id = 0;
    std::array<int, 2> under{};
    std::array<int, 2> over{};

    bool operator==(const LinkCrossing &) const = default;
};

struct GraphVertex {
    int id = 0;
    std::array<int, 3> ends{};

    bool operator==(const GraphVertex &) const = default;
};

struct LinkDiagram {
    std::vector<Component> components;
    std::vector<LinkArc> arcs;
    std::vector<LinkCrossing> crossings;
    std::vector<GraphVertex> vertices;

    bool operator==(const LinkDiagram &) const = default;
};

// Either a closed-form family or an explicit diagram.
struct FramedLink {
    enum class Kind { empty, unlink, diagram } kind = Kind::empty;
    std::vector<int> framings;  // unlink: one integer framing per component
    LinkDiagram diagram;

    bool operator==(const FramedLink &) const = default;
};

FramedLink empty_link();
FramedLink unlink(std::vector<int> framings);
inline FramedLink unknot(int framing) { return unlink({framing}); }
FramedLink from_diagram(LinkDiagram d);

// Diagram from a builder result: the arc tagged t belongs to components[t].
LinkDiagram diagram_from_builder(const tl::SliceBuilder::Result &b, std::vector<Component> components);
// Side-by-side union; ids of the second diagram are shifted past the first.
LinkDiagram disjoint_union(const LinkDiagram &x, const LinkDiagram &y);

// Checks ids, arc ends and that every component is a single chain, closed
// for omega components.
std::vector<std::string> validate(const LinkDiagram &d);
void check(const LinkDiagram &d);

// The tl diagram with omega components coloured by omega_colors (in the
// order of the omega components) and framing offsets applied.
tl::FramedGraphDiagram to_tl(const LinkDiagram &d, const std::vector<int> &omega_colors = {});
// Indices into d.components of the omega components.
std::vector<int> omega_components(const LinkDiagram &d);
// Reverses the orientation of the component at index i.
LinkDiagram reverse_component(const LinkDiagram &d, int i);

// Linking matrix of the omega components: half the signed crossings between
// two components off the diagonal, framings on it. Needs consistent arc
// orientations and integer framings.
std::vector<std::vector<long long>> linking_matrix(const FramedLink &l);
int signature(const FramedLink &l);

struct SurgeryOptions {
    tl::Budget budget{};
    bool mirror = false;
};

// Omega(L, G'): the omega components coloured by Omega, the colour
// components by their projectors.
struct OmegaEvaluation {
    Complex value;
    long long terms = 0;
};
OmegaEvaluation omega_evaluation(const RootContext &ctx, const FramedLink &l, const SurgeryOptions &opts = {});

// eta kappa^{-sigma} Omega(L, G') with kappa the +1-framed Omega unknot.
struct SurgeryInvariant {
    Complex value;
    int sigma = 0;
    std::vector<std::vector<long long>> linking;
    OmegaEvaluation omega;
};
SurgeryInvariant invariant_from_surgery(const RootContext &ctx, const FramedLink &l, const SurgeryOptions &opts = {});

// For a diagram with no omega components and a single colour c on every
// component: eta <D> ((-1)^c A^{c^2+2c})^{-w}, w the writhe plus the framing
// offsets. With c = r - 2 this is the oriented link invariant.
Complex writhe_normalized_invariant(const RootContext &ctx, const LinkDiagram &d, const SurgeryOptions &opts = {});

} // namespace shadowsum::surgery
