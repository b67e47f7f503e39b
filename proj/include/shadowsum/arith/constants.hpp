#pragma once

#include "shadowsum/arith/laurent.hpp"

namespace shadowsum::arith {

// Value of a trivial circle: -A^2 - A^-2.
LaurentPoly quantum_loop(const RootContext &ctx);

// eta = (A^2 - A^-2) / sqrt(-2r), with the branch chosen positive so that
// eta * (sum_n Delta_n^2)^{1/2} = 1.
Complex eta(const RootContext &ctx);

// Printed closed form sum_{n=1}^{4r} A^{n^2} / (2r sqrt(-2) A^{3+r^2}) with
// the principal sqrt(-2). Note: its modulus is 1/sqrt(r); the evaluation of
// the +1-framed Omega-coloured unknot (recoupling::omega_unknot) has modulus 1
// and is what the invariants use.
Complex kappa(const RootContext &ctx);

// (-i/sqrt(r)) exp(-i pi (2r^2 - r + 6) / (4r)), the k = 1 form of kappa.
Complex kappa_principal_closed_form(int r);

// sum_{n=1}^{4r} A^{n^2}.
Complex gauss_sum(const RootContext &ctx);

} // namespace shadowsum::arith
