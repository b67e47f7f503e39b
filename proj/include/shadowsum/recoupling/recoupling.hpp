#pragma once

#include <array>
#include <vector>

#include "shadowsum/arith/fraction.hpp"
#include "shadowsum/tl/network.hpp"

namespace shadowsum::recoupling {

using arith::Complex;
using arith::Fraction;
using arith::LaurentPoly;
using arith::RootContext;

struct ColorTriple {
    int a = 0, b = 0, c = 0;
};

// Edge labels of K4 with vertex triples (a,b,c), (a,e,f), (b,f,d), (c,e,d).
// Opposite edges are (a,d), (b,e), (c,f).
using TetLabels = std::array<int, 6>;
enum TetSlot { kA, kB, kC, kD, kE, kF };

// The four vertex triples of a tetrahedron, as slot indices.
inline constexpr std::array<std::array<int, 3>, 4> kTetFaces{{{kA, kB, kC}, {kA, kE, kF}, {kB, kF, kD}, {kC, kE, kD}}};

bool is_admissible(const ColorTriple &t);
bool is_q_admissible(const RootContext &ctx, const ColorTriple &t);
bool is_q_admissible_tet(const RootContext &ctx, const TetLabels &l);

// Generic closed forms, no root attached.
Fraction delta_generic(int n);
Fraction theta_generic(const ColorTriple &t);  // t admissible
Fraction tet_generic(const TetLabels &l);      // all four triples admissible

// Delta_n = (-1)^n [n+1], 0 <= n <= r-1.
Fraction delta(const RootContext &ctx, int n);
// Zero unless q-admissible.
Fraction theta(const RootContext &ctx, const ColorTriple &t);
Fraction tet(const RootContext &ctx, const TetLabels &l);

// Memoised numeric values, keyed by the root.
Complex delta_value(const RootContext &ctx, int n);
Complex theta_value(const RootContext &ctx, const ColorTriple &t);
Complex tet_value(const RootContext &ctx, const TetLabels &l);

// The same quantities computed by the bracket of the planar graph.
Fraction delta_oracle(const RootContext &ctx, int n);
Fraction theta_oracle(const RootContext &ctx, const ColorTriple &t);
Fraction tet_oracle(const RootContext &ctx, const TetLabels &l);

// All 24 relabelings of l induced by permuting the vertices of K4, the
// identity first.
std::vector<TetLabels> tet_relabelings(const TetLabels &l);
// Slot permutations realising tet_relabelings: result[k][s] is the slot of
// the original labels that lands in slot s.
const std::vector<std::array<int, 6>> &tet_slot_permutations();

// {a b i; c d j} = Delta_i tet(a,d,i,c,b,j) / (theta(a,d,i) theta(c,b,i)).
// Zero when the tetrahedron vanishes; DomainError when the quotient is 0/0.
Fraction sixj_exact(const RootContext &ctx, int a, int b, int c, int d, int i, int j);
Complex sixj(const RootContext &ctx, int a, int b, int c, int d, int i, int j);

// Coefficient of framing2 positive half twists on a colour-n edge.
LaurentPoly half_twist_coeff(const RootContext &ctx, int n, int framing2);

// eta * sum_n Delta_n^2 ((-1)^n A^{n^2+2n})^framing.
Complex omega_unknot(const RootContext &ctx, int framing);
// sum_n Delta_n^2 ((-1)^n A^{n^2+2n})^framing, exactly.
LaurentPoly omega_unknot_sum(const RootContext &ctx, int framing);

Complex fusion2_coeff(const RootContext &ctx, int a, int b);
Complex fusion3_coeff(const RootContext &ctx, const ColorTriple &t);

} // namespace shadowsum::recoupling
