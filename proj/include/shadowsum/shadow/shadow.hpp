#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shadowsum/arith/fraction.hpp"
#include "shadowsum/arith/signature.hpp"

namespace shadowsum::shadow {

using arith::Complex;
using arith::Fraction;
using arith::RootContext;

struct Region {
    int id = 0;
    int gleam2 = 0;  // twice the gleam
    int chi = 0;     // Euler characteristic of the closure
    bool external = false;
    std::optional<int> color;  // required on external regions
    std::optional<bool> orientable;

    bool operator==(const Region &) const = default;
};

struct InternalEdge {
    int id = 0;
    int chi = 0;
    std::array<int, 3> regions{};
    // Coefficient of each slot in the boundary map.
    std::optional<std::array<int, 3>> signs;
    // Whether the interval bundle over the region boundary carries a half
    // twist along this slot.
    std::optional<std::array<bool, 3>> nonorientable;

    bool operator==(const InternalEdge &) const = default;
};

struct InternalVertex {
    int id = 0;
    // Regions in tet slots a..f; see recoupling::TetLabels.
    std::array<int, 6> tet{};

    bool operator==(const InternalVertex &) const = default;
};

struct BoundaryEdge {
    int id = 0;
    int chi = 0;
    int region = 0;
    int color = 0;

    bool operator==(const BoundaryEdge &) const = default;
};

struct BoundaryVertex {
    int id = 0;
    std::array<int, 3> edges{};

    bool operator==(const BoundaryVertex &) const = default;
};

struct Shadow {
    std::vector<Region> regions;
    std::vector<InternalEdge> edges;
    std::vector<InternalVertex> vertices;
    std::vector<BoundaryEdge> boundary_edges;
    std::vector<BoundaryVertex> boundary_vertices;
    std::optional<int> sigma;

    bool operator==(const Shadow &) const = default;
};

struct Validation {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

// All violated invariants; with a context also checks q-admissibility of the
// boundary colouring.
Validation validate(const Shadow &s, const RootContext *ctx = nullptr);
// Throws ValidationError listing the violations.
void check(const Shadow &s, const RootContext *ctx = nullptr);

// Alternating sum over all strata, boundary vertices and edges included.
int euler_characteristic(const Shadow &s);

// Region colours in the order of s.regions.
using Coloring = std::vector<int>;

// Visits the q-admissible colourings extending the boundary colouring in
// lexicographic order of region ids. With first_color set, only colourings
// giving the lowest-id region that colour are visited.
void for_each_coloring(const RootContext &ctx, const Shadow &s, const std::function<void(const Coloring &)> &visit,
                       std::optional<int> first_color = std::nullopt);
std::vector<Coloring> enumerate_colorings(const RootContext &ctx, const Shadow &s);

enum class PhaseSign { minus, plus };

// (-1)^{gc} A^{-+ g c (c+2)} through the fixed sqrt(-1) and sqrt(A): the
// inverse of gleam2 half twists on a colour-c edge under the minus sign.
arith::LaurentPoly phase_exact(const RootContext &ctx, const Region &region, int color,
                               PhaseSign sign = PhaseSign::minus);
Complex phase(const RootContext &ctx, const Region &region, int color, PhaseSign sign = PhaseSign::minus);

Complex state_sum_term(const RootContext &ctx, const Shadow &s, const Coloring &xi,
                       PhaseSign sign = PhaseSign::minus);
Fraction state_sum_term_exact(const RootContext &ctx, const Shadow &s, const Coloring &xi,
                              PhaseSign sign = PhaseSign::minus);

struct StateSumOptions {
    PhaseSign phase_sign = PhaseSign::minus;
    int jobs = 1;
};

struct StateSum {
    Complex value;
    std::int64_t colorings = 0;
};

StateSum state_sum(const RootContext &ctx, const Shadow &s, const StateSumOptions &opts = {});

// kappa^{-sigma} eta^{chi} |X|^r with kappa the +1-framed Omega unknot.
// sigma defaults to s.sigma, then to the signature of the shadow.
struct ShadowInvariant {
    Complex value;
    int sigma = 0;
    int chi = 0;
    StateSum sum;
};
ShadowInvariant invariant_from_shadow(const RootContext &ctx, const Shadow &s, std::optional<int> sigma = std::nullopt,
                                      const StateSumOptions &opts = {});

// Region-coefficient vectors of a Z-basis of H_2.
using Cycle = std::vector<long long>;
bool has_homology_data(const Shadow &s);
std::vector<Cycle> homology_h2(const Shadow &s);
// sum_R h1(R) h2(R) gl(R).
arith::Rational bilinear_form(const Shadow &s, const Cycle &h1, const Cycle &h2);
arith::RationalMatrix gram_matrix(const Shadow &s, const std::vector<Cycle> &basis);
int signature(const Shadow &s);

} // namespace shadowsum::shadow
