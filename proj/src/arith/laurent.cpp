#include "shadowsum/arith/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "shadowsum/error.hpp"

namespace shadowsum::arith {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff narrow(__int128 v) {
    if (v > std::numeric_limits<Coeff>::max() || v < std::numeric_limits<Coeff>::min())
        throw InternalError("Laurent coefficient overflow");
    return static_cast<Coeff>(v);
}

Coeff add_checked(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out))
        throw InternalError("Laurent coefficient overflow");
    return out;
}

Coeff sub_checked(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_sub_overflow(a, b, &out))
        throw InternalError("Laurent coefficient overflow");
    return out;
}

} // namespace

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0)
        c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
    LaurentPoly p(c);
    if (c != 0)
        p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Coeff> &terms) {
    LaurentPoly p;
    for (const auto &[e, c] : terms)
        p += monomial(c, e);
    return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Coeff> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0)
        ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (c_.empty())
        low_ = 0;
}

Coeff LaurentPoly::coeff(int exponent) const {
    const long idx = static_cast<long>(exponent) - low_;
    if (idx < 0 || idx >= static_cast<long>(c_.size()))
        return 0;
    return c_[static_cast<std::size_t>(idx)];
}

std::map<int, Coeff> LaurentPoly::terms() const {
    std::map<int, Coeff> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            out[low_ + static_cast<int>(i)] = c_[i];
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto &c : p.c_) {
        if (c == std::numeric_limits<Coeff>::min())
            throw InternalError("Laurent coefficient overflow");
        c = -c;
    }
    return p;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), 0);
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        auto &slot = c_[static_cast<std::size_t>(o.low_ - lo) + i];
        slot = add_checked(slot, o.c_[i]);
    }
    normalize();
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = -o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), 0);
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        auto &slot = c_[static_cast<std::size_t>(o.low_ - lo) + i];
        slot = sub_checked(slot, o.c_[i]);
    }
    normalize();
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<__int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const __int128 ai = a.c_[i];
        if (ai == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            acc[i + j] += ai * b.c_[j];
    }
    LaurentPoly p;
    p.low_ = a.low_ + b.low_;
    p.c_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        p.c_[i] = narrow(acc[i]);
    p.normalize();
    return p;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) { return *this = *this * o; }

std::strong_ordering operator<=>(const LaurentPoly &a, const LaurentPoly &b) {
    if (auto c = a.c_.size() <=> b.c_.size(); c != 0)
        return c;
    if (auto c = a.low_ <=> b.low_; c != 0)
        return c;
    return a.c_ <=> b.c_;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0)
        throw DomainError("negative power of a Laurent polynomial");
    LaurentPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(int exponent) const {
    LaurentPoly p = *this;
    if (!p.is_zero())
        p.low_ += exponent;
    return p;
}

LaurentPoly LaurentPoly::inflate(int p) const {
    if (p == 0)
        throw DomainError("inflate by zero");
    if (is_zero())
        return {};
    if (p < 0)
        return mirrored().inflate(-p);
    LaurentPoly out;
    out.low_ = low_ * p;
    out.c_.assign((c_.size() - 1) * static_cast<std::size_t>(p) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i * static_cast<std::size_t>(p)] = c_[i];
    return out;
}

LaurentPoly LaurentPoly::mirrored() const {
    if (is_zero())
        return {};
    LaurentPoly out;
    out.low_ = -high();
    out.c_.assign(c_.rbegin(), c_.rend());
    return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly &d) const {
    if (d.is_zero())
        throw DomainError("division by the zero polynomial");
    if (is_zero())
        return LaurentPoly{};
    const Coeff lead = d.c_.back();
    if (lead != 1 && lead != -1)
        throw DomainError("divide_exact needs a divisor with unit leading coefficient");
    if (c_.size() < d.c_.size())
        return std::nullopt;
    std::vector<Coeff> rem = c_;
    const std::size_t qlen = c_.size() - d.c_.size() + 1;
    std::vector<Coeff> q(qlen, 0);
    for (std::size_t step = qlen; step-- > 0;) {
        const Coeff top = rem[step + d.c_.size() - 1];
        if (top == 0)
            continue;
        const Coeff qc = lead == 1 ? top : -top;
        q[step] = qc;
        for (std::size_t j = 0; j < d.c_.size(); ++j) {
            if (d.c_[j] == 0)
                continue;
            rem[step + j] = narrow(static_cast<__int128>(rem[step + j]) -
                                   static_cast<__int128>(qc) * d.c_[j]);
        }
    }
    for (std::size_t i = 0; i + 1 < d.c_.size() && i < rem.size(); ++i)
        if (rem[i] != 0)
            return std::nullopt;
    return from_dense(low_ - d.low_, std::move(q));
}

LaurentPoly LaurentPoly::reduce_mod(const LaurentPoly &monic) const {
    if (monic.low_ != 0 || monic.c_.back() != 1)
        throw DomainError("reduce_mod needs a monic polynomial with nonzero constant term");
    if (is_zero())
        return {};
    std::vector<__int128> rem(c_.begin(), c_.end());
    const std::size_t deg = monic.c_.size() - 1;
    for (std::size_t top = rem.size(); top-- > deg;) {
        const __int128 t = rem[top];
        if (t == 0)
            continue;
        for (std::size_t j = 0; j <= deg; ++j)
            rem[top - deg + j] -= t * monic.c_[j];
    }
    rem.resize(std::min(rem.size(), deg));
    std::vector<Coeff> out(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i)
        out[i] = narrow(rem[i]);
    return from_dense(0, std::move(out));
}

Complex LaurentPoly::evaluate(const RootContext &ctx) const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            sum += static_cast<double>(c_[i]) * ctx.s_power(low_ + static_cast<long long>(i));
    return sum;
}

std::string LaurentPoly::to_string(const char *var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
        const Coeff c = c_[idx];
        if (c == 0)
            continue;
        const int e = low_ + static_cast<int>(idx);
        const Coeff mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << var;
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

} // namespace shadowsum::arith
