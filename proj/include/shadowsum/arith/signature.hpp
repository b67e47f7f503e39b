#pragma once

#include <vector>

#include <boost/rational.hpp>

namespace shadowsum::arith {

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int signature() const { return positive - negative; }
};

// Inertia of a symmetric matrix by rational congruence diagonalisation.
Inertia inertia(RationalMatrix m);
int signature(const RationalMatrix &m);
int signature(const std::vector<std::vector<long long>> &m);

} // namespace shadowsum::arith
