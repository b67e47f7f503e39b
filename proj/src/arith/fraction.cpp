#include "shadowsum/arith/fraction.hpp"

#include <algorithm>
#include <sstream>

#include "shadowsum/arith/cyclotomic.hpp"
#include "shadowsum/error.hpp"

namespace shadowsum::arith {

namespace {

LaurentPoly den_product(const Fraction::Denominator &den) {
    LaurentPoly p(1);
    for (const auto &[d, m] : den)
        p *= cyclotomic_in_q(d).pow(m);
    return p;
}

// Largest cyclotomic index tried when factoring a numerator for inversion.
constexpr int kMaxFactorIndex = 512;

} // namespace

Fraction::Fraction(LaurentPoly num) : num_(std::move(num)) {}

Fraction::Fraction(LaurentPoly::Coeff c) : num_(c) {}

Fraction Fraction::from_parts(LaurentPoly num, Denominator den) {
    std::sort(den.begin(), den.end());
    Denominator merged;
    for (const auto &[d, m] : den) {
        if (d < 1 || m < 0)
            throw DomainError("malformed cyclotomic denominator");
        if (m == 0)
            continue;
        if (!merged.empty() && merged.back().first == d)
            merged.back().second += m;
        else
            merged.emplace_back(d, m);
    }
    Fraction f;
    f.num_ = std::move(num);
    f.den_ = std::move(merged);
    f.reduce();
    return f;
}

Fraction Fraction::quantum_integer(int n) {
    if (n < 0)
        return -quantum_integer(-n);
    if (n == 0)
        return {};
    // [n] = q^{1-n} * prod_{d | 2n, d > 2} Phi_d(q)
    LaurentPoly p = LaurentPoly::monomial(1, 4 * (1 - n));
    for (int d = 3; d <= 2 * n; ++d)
        if ((2 * n) % d == 0)
            p *= cyclotomic_in_q(d);
    return Fraction(std::move(p));
}

Fraction Fraction::quantum_factorial(int n) {
    if (n < 0)
        throw DomainError("negative quantum factorial");
    Fraction f(1);
    for (int i = 2; i <= n; ++i)
        f *= quantum_integer(i);
    return f;
}

LaurentPoly Fraction::denominator_poly() const { return den_product(den_); }

std::optional<LaurentPoly> Fraction::as_polynomial() const {
    if (!den_.empty())
        return std::nullopt;
    return num_;
}

void Fraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    Denominator kept;
    for (auto [d, m] : den_) {
        const LaurentPoly &phi = cyclotomic_in_q(d);
        while (m > 0) {
            auto q = num_.divide_exact(phi);
            if (!q)
                break;
            num_ = std::move(*q);
            --m;
        }
        if (m > 0)
            kept.emplace_back(d, m);
    }
    den_ = std::move(kept);
}

Fraction Fraction::operator-() const {
    Fraction f = *this;
    f.num_ = -f.num_;
    return f;
}

Fraction &Fraction::operator+=(const Fraction &o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    // Common denominator: the factor-wise maximum.
    Denominator lcm;
    LaurentPoly mine = num_, theirs = o.num_;
    std::size_t i = 0, j = 0;
    while (i < den_.size() || j < o.den_.size()) {
        if (j == o.den_.size() || (i < den_.size() && den_[i].first < o.den_[j].first)) {
            theirs *= cyclotomic_in_q(den_[i].first).pow(den_[i].second);
            lcm.push_back(den_[i++]);
        } else if (i == den_.size() || o.den_[j].first < den_[i].first) {
            mine *= cyclotomic_in_q(o.den_[j].first).pow(o.den_[j].second);
            lcm.push_back(o.den_[j++]);
        } else {
            const int d = den_[i].first, a = den_[i].second, b = o.den_[j].second;
            if (a < b)
                mine *= cyclotomic_in_q(d).pow(b - a);
            else if (b < a)
                theirs *= cyclotomic_in_q(d).pow(a - b);
            lcm.emplace_back(d, std::max(a, b));
            ++i;
            ++j;
        }
    }
    num_ = mine + theirs;
    den_ = std::move(lcm);
    reduce();
    return *this;
}

Fraction &Fraction::operator-=(const Fraction &o) { return *this += -o; }

Fraction &Fraction::operator*=(const Fraction &o) {
    if (is_zero() || o.is_zero()) {
        num_ = {};
        den_.clear();
        return *this;
    }
    if (o.den_.empty() && den_.empty()) {
        num_ *= o.num_;
        return *this;
    }
    // Cancel crosswise first so intermediate numerators stay small.
    Fraction a = Fraction::from_parts(num_, o.den_);
    Fraction b = Fraction::from_parts(o.num_, den_);
    Denominator den = a.den_;
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    std::sort(den.begin(), den.end());
    Denominator merged;
    for (const auto &[d, m] : den) {
        if (!merged.empty() && merged.back().first == d)
            merged.back().second += m;
        else
            merged.emplace_back(d, m);
    }
    num_ = a.num_ * b.num_;
    den_ = std::move(merged);
    return *this;
}

bool operator==(const Fraction &a, const Fraction &b) {
    if (a.den_ == b.den_)
        return a.num_ == b.num_;
    return (a - b).is_zero();
}

std::strong_ordering operator<=>(const Fraction &a, const Fraction &b) {
    if (auto c = a.den_ <=> b.den_; c != 0)
        return c;
    return a.num_ <=> b.num_;
}

Fraction Fraction::inverse() const {
    if (is_zero())
        throw DomainError("division by zero");
    const int shift = num_.low();
    LaurentPoly rest = num_.shifted(-shift);
    Denominator factors;
    for (int d = 1; d <= kMaxFactorIndex && rest.high() > 0; ++d) {
        if (4 * euler_phi(d) > rest.high())
            continue;
        const LaurentPoly &phi = cyclotomic_in_q(d);
        int m = 0;
        while (rest.high() >= phi.high()) {
            auto q = rest.divide_exact(phi);
            if (!q)
                break;
            rest = std::move(*q);
            ++m;
        }
        if (m > 0)
            factors.emplace_back(d, m);
    }
    if (!rest.is_monomial() || rest.low() != 0 || (rest.coeff(0) != 1 && rest.coeff(0) != -1))
        throw DomainError("cannot invert " + to_string() +
                          ": numerator is not a unit times cyclotomic factors");
    LaurentPoly num = den_product(den_).shifted(-shift);
    if (rest.coeff(0) == -1)
        num = -num;
    Fraction f;
    f.num_ = std::move(num);
    f.den_ = std::move(factors);
    return f;
}

Fraction Fraction::pow(int e) const {
    if (e < 0)
        return inverse().pow(-e);
    Fraction result(1), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

bool Fraction::singular_at(const RootContext &ctx) const {
    // q = A^2 has exact order 2r, so Phi_d(q) vanishes only for d = 2r.
    for (const auto &[d, m] : den_)
        if (d == 2 * ctx.r())
            return true;
    return false;
}

LaurentPoly fold_at_root(const RootContext &ctx, const LaurentPoly &p) {
    const long long half = 4LL * ctx.r();
    std::vector<__int128> acc(static_cast<std::size_t>(half), 0);
    const auto &c = p.dense();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        long long e = (static_cast<long long>(p.low()) + static_cast<long long>(i)) % (2 * half);
        if (e < 0)
            e += 2 * half;
        if (e >= half)
            acc[static_cast<std::size_t>(e - half)] -= c[i];
        else
            acc[static_cast<std::size_t>(e)] += c[i];
    }
    std::vector<LaurentPoly::Coeff> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] > INT64_MAX || acc[i] < INT64_MIN)
            throw InternalError("coefficient overflow while folding");
        out[i] = static_cast<LaurentPoly::Coeff>(acc[i]);
    }
    return LaurentPoly::from_dense(0, std::move(out));
}

bool vanishes_at(const RootContext &ctx, const LaurentPoly &p) {
    if (p.is_zero())
        return true;
    return fold_at_root(ctx, p).reduce_mod(cyclotomic(8 * ctx.r())).is_zero();
}

Complex Fraction::evaluate(const RootContext &ctx) const {
    if (singular_at(ctx))
        throw DomainError("denominator of " + to_string() + " vanishes at r = " +
                          std::to_string(ctx.r()));
    Complex value = fold_at_root(ctx, num_).evaluate(ctx);
    for (const auto &[d, m] : den_) {
        const Complex phi = fold_at_root(ctx, cyclotomic_in_q(d)).evaluate(ctx);
        value /= std::pow(phi, m);
    }
    return value;
}

bool Fraction::vanishes_at(const RootContext &ctx) const {
    if (singular_at(ctx))
        throw DomainError("denominator of " + to_string() + " vanishes at r = " +
                          std::to_string(ctx.r()));
    return arith::vanishes_at(ctx, num_);
}

bool Fraction::equals_at(const RootContext &ctx, const Fraction &o) const {
    if (singular_at(ctx) || o.singular_at(ctx))
        throw DomainError("comparison of values that are singular at the root");
    return (*this - o).vanishes_at(ctx);
}

std::string Fraction::to_string() const {
    if (den_.empty())
        return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i)
            os << "*";
        os << "Phi" << den_[i].first << "(q)";
        if (den_[i].second != 1)
            os << "^" << den_[i].second;
    }
    os << ")";
    return os.str();
}

} // namespace shadowsum::arith
