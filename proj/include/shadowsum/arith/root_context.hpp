#pragma once

#include <complex>
#include <compare>
#include <memory>
#include <vector>

namespace shadowsum::arith {

using Complex = std::complex<double>;

// Identifies a RootContext inside memo tables.
struct RootKey {
    int r;
    int k;
    int m;
    int sigma;
    auto operator<=>(const RootKey &) const = default;
};

// A = exp(i*pi*k/(2r)) with gcd(k, 4r) = 1. The square root s of A is
// exp(i*pi*m/(4r)) with m = k or m = k + 4r (mod 8r), and sqrt(-1) is
// sigma * A^r.
class RootContext {
public:
    explicit RootContext(int r, int k = 1, int sqrt_branch = 0, int sigma = 1);

    int r() const { return r_; }
    int a_exponent() const { return k_; }
    int sqrt_a_exponent() const { return m_; }
    int sqrt_branch() const { return m_ == k_ ? 0 : 1; }
    int sqrt_minus_one_sign() const { return sigma_; }
    RootKey key() const { return {r_, k_, m_, sigma_}; }

    // s^e evaluated numerically; exponents are reduced mod 8r.
    Complex s_power(long long e) const;
    Complex A() const { return s_power(2); }
    Complex sqrt_a() const { return s_power(1); }
    Complex sqrt_minus_one() const { return double(sigma_) * s_power(2LL * r_); }

    bool operator==(const RootContext &o) const { return key() == o.key(); }

private:
    int r_;
    int k_;
    int m_;
    int sigma_;
    std::shared_ptr<const std::vector<Complex>> powers_;
};

} // namespace shadowsum::arith
