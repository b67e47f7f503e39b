#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowsum/arith/laurent.hpp"

namespace shadowsum::arith {

// Exact element of Q(s) whose denominator is a product of cyclotomic
// polynomials Phi_d(q), q = s^4. Quantum integers, Jones-Wenzl coefficients
// and theta/tet evaluations all live here. The numerator is kept free of
// denominator factors, so equal values have equal representations.
class Fraction {
public:
    // (d, multiplicity) pairs, sorted by d, multiplicities positive.
    using Denominator = std::vector<std::pair<int, int>>;

    Fraction() = default;
    Fraction(LaurentPoly num);          // NOLINT
    Fraction(LaurentPoly::Coeff c);     // NOLINT
    Fraction(int c) : Fraction(static_cast<LaurentPoly::Coeff>(c)) {}  // NOLINT
    static Fraction from_parts(LaurentPoly num, Denominator den);

    // [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}); [0] = 0.
    static Fraction quantum_integer(int n);
    static Fraction quantum_factorial(int n);

    const LaurentPoly &numerator() const { return num_; }
    const Denominator &denominator() const { return den_; }
    LaurentPoly denominator_poly() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    std::optional<LaurentPoly> as_polynomial() const;

    Fraction operator-() const;
    Fraction &operator+=(const Fraction &o);
    Fraction &operator-=(const Fraction &o);
    Fraction &operator*=(const Fraction &o);
    Fraction &operator/=(const Fraction &o) { return *this *= o.inverse(); }
    friend Fraction operator+(Fraction a, const Fraction &b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction &b) { return a -= b; }
    friend Fraction operator*(Fraction a, const Fraction &b) { return a *= b; }
    friend Fraction operator/(Fraction a, const Fraction &b) { return a /= b; }
    friend bool operator==(const Fraction &a, const Fraction &b);
    // Canonical total order on representations.
    friend std::strong_ordering operator<=>(const Fraction &a, const Fraction &b);

    // Only fractions whose numerator is a unit times cyclotomic factors in q
    // are invertible; anything else raises DomainError.
    Fraction inverse() const;
    Fraction pow(int e) const;

    // True when the denominator vanishes at the context's root.
    bool singular_at(const RootContext &ctx) const;
    Complex evaluate(const RootContext &ctx) const;
    // Exact test of equality after specialising s to the context's root.
    bool equals_at(const RootContext &ctx, const Fraction &o) const;
    bool vanishes_at(const RootContext &ctx) const;

    std::string to_string() const;

private:
    void reduce();

    LaurentPoly num_;
    Denominator den_;
};

// Exact value of a Laurent polynomial at the root, folded to exponents in
// [0, 4r) using s^{4r} = -1; zero iff the polynomial vanishes there.
LaurentPoly fold_at_root(const RootContext &ctx, const LaurentPoly &p);
bool vanishes_at(const RootContext &ctx, const LaurentPoly &p);

} // namespace shadowsum::arith
