// Test-only reference implementations, deliberately independent of the
// library's linear algebra: plain long-long fractions and textbook row
// reduction. Used to cross-check rref, rank, kernels and ranks of small
// rational matrices.
#pragma once

#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

struct Frac {
    long long n = 0, d = 1;

    static Frac make(long long n, long long d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(std::abs(n), d);
        return g ? Frac{n / g, d / g} : Frac{0, 1};
    }
    bool zero() const { return n == 0; }
    friend Frac operator+(Frac a, Frac b) { return make(a.n * b.d + b.n * a.d, a.d * b.d); }
    friend Frac operator-(Frac a, Frac b) { return make(a.n * b.d - b.n * a.d, a.d * b.d); }
    friend Frac operator*(Frac a, Frac b) { return make(a.n * b.n, a.d * b.d); }
    friend Frac operator/(Frac a, Frac b) { return make(a.n * b.d, a.d * b.n); }
    friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
};

using Mat = std::vector<std::vector<Frac>>;

inline Mat from_ints(const std::vector<std::vector<long long>>& rows) {
    Mat m;
    for (const auto& r : rows) {
        std::vector<Frac> row;
        for (long long v : r) row.push_back(Frac{v, 1});
        m.push_back(row);
    }
    return m;
}

struct Reduced {
    Mat m;
    std::vector<std::size_t> pivots;
};

inline Reduced rref(Mat m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].zero()) {
                p = i;
                break;
            }
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Frac inv = Frac{1, 1} / m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].zero()) continue;
            const Frac f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return {m, pivots};
}

inline std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

// Deterministic sample values for property checks.
inline long long lcg_next(unsigned long long& state) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long long>((state >> 33) % 11) - 5;
}

}  // namespace oracle
