#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shadowsum/arith/root_context.hpp"

namespace shadowsum::arith {

// Laurent polynomial with integer coefficients in the formal variable s, where
// s stands for a square root of A. Coefficients are stored densely from the
// lowest nonzero exponent; zero has no coefficients at all.
class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff c);  // NOLINT: constants convert implicitly
    static LaurentPoly monomial(Coeff c, int exponent);
    static LaurentPoly from_terms(const std::map<int, Coeff> &terms);
    // Coefficients c[0], c[1], ... of s^low, s^(low+1), ...
    static LaurentPoly from_dense(int low, std::vector<Coeff> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    Coeff coeff(int exponent) const;
    const std::vector<Coeff> &dense() const { return c_; }
    std::map<int, Coeff> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    // Total order used to sort multisets canonically.
    friend std::strong_ordering operator<=>(const LaurentPoly &a, const LaurentPoly &b);

    LaurentPoly pow(int e) const;
    LaurentPoly shifted(int exponent) const;
    // Substitutes s -> s^p.
    LaurentPoly inflate(int p) const;
    // Substitutes s -> s^-1.
    LaurentPoly mirrored() const;

    // Exact quotient by d if d divides this polynomial up to a monomial
    // factor (the quotient may then carry a shift). Requires the extreme
    // coefficients of d to be +-1.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly &d) const;
    // Remainder of s^(-low) * this modulo a monic polynomial with nonzero
    // constant term, as an ordinary polynomial.
    LaurentPoly reduce_mod(const LaurentPoly &monic) const;

    Complex evaluate(const RootContext &ctx) const;
    std::string to_string(const char *var = "s") const;

private:
    void normalize();

    int low_ = 0;
    std::vector<Coeff> c_;
};

// s-polynomials built from powers of A = s^2.
inline LaurentPoly a_power(int e) { return LaurentPoly::monomial(1, 2 * e); }

} // namespace shadowsum::arith
