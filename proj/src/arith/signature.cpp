#include "shadowsum/arith/signature.hpp"

#include <utility>

#include "shadowsum/error.hpp"

namespace shadowsum::arith {

namespace {

const Rational kZero(0);

void swap_index(RationalMatrix &m, int i, int j) {
    std::swap(m[i], m[j]);
    for (auto &row : m)
        std::swap(row[i], row[j]);
}

// Row and column j added to row and column i.
void add_index(RationalMatrix &m, int i, int j, Rational f) {
    const int n = static_cast<int>(m.size());
    for (int k = 0; k < n; ++k)
        m[i][k] += f * m[j][k];
    for (int k = 0; k < n; ++k)
        m[k][i] += f * m[k][j];
}

} // namespace

Inertia inertia(RationalMatrix m) {
    const int n = static_cast<int>(m.size());
    for (const auto &row : m)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (m[i][j] != m[j][i])
                throw ValidationError("matrix is not symmetric");
    Inertia out;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == kZero) {
            int j = k + 1;
            while (j < n && m[j][j] == kZero)
                ++j;
            if (j < n) {
                swap_index(m, k, j);
            } else {
                j = k + 1;
                while (j < n && m[k][j] == kZero)
                    ++j;
                if (j == n) {
                    ++out.zero;
                    continue;
                }
                // Diagonal entries beyond k vanish, so this makes m[k][k] = 2 m[k][j].
                add_index(m, k, j, 1);
            }
        }
        const Rational p = m[k][k];
        for (int j = k + 1; j < n; ++j)
            if (m[j][k] != kZero)
                add_index(m, j, k, -m[j][k] / p);
        (p > kZero ? out.positive : out.negative) += 1;
    }
    return out;
}

int signature(const RationalMatrix &m) { return inertia(m).signature(); }

int signature(const std::vector<std::vector<long long>> &m) {
    RationalMatrix r;
    for (const auto &row : m) {
        r.emplace_back();
        for (long long x : row)
            r.back().emplace_back(x);
    }
    return signature(r);
}

} // namespace shadowsum::arith
