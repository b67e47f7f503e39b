#pragma once

#include "shadowsum/arith/laurent.hpp"

namespace shadowsum::arith {

// d-th cyclotomic polynomial, as a polynomial in s. Thread safe; results are
// cached for the lifetime of the process.
const LaurentPoly &cyclotomic(int d);

// Phi_d(q) with q = A^2 = s^4.
const LaurentPoly &cyclotomic_in_q(int d);

int euler_phi(int d);

} // namespace shadowsum::arith
