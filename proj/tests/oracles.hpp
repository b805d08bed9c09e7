#pragma once

// Small independent reference computations. Nothing here calls into the
// library's linear algebra or cone code.

#include "hilb3/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using hilb3::Rational;
using Vec = std::vector<Rational>;

// Unique solution of sum_j lambda_j cols[j] = b, or nullopt when the columns
// are dependent or the system is inconsistent. Plain Gauss-Jordan.
inline std::optional<Vec> unique_solution(const std::vector<Vec>& cols, const Vec& b) {
    const std::size_t n = b.size(), m = cols.size();
    std::vector<Vec> a(n, Vec(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = cols[j][i];
        a[i][m] = b[i];
    }
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;  // dependent columns
        std::swap(a[p], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t k = 0; k <= m; ++k) a[i][k] -= f * a[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (!a[i][m].is_zero()) return std::nullopt;
    Vec x(m);
    for (std::size_t i = 0; i < r; ++i) x[piv[i]] = a[i][m];
    return x;
}

// Caratheodory: b lies in cone(gens) iff it is a nonnegative combination of
// some linearly independent subset. Tries every subset.
inline bool cone_member_bruteforce(const std::vector<Vec>& gens, const Vec& b) {
    bool zero = true;
    for (const auto& x : b) zero = zero && x.is_zero();
    if (zero) return true;
    const std::size_t m = gens.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<Vec> sub;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (1u << j)) sub.push_back(gens[j]);
        auto x = unique_solution(sub, b);
        if (!x) continue;
        bool ok = true;
        for (const auto& v : *x) ok = ok && v.sign() >= 0;
        if (ok) return true;
    }
    return false;
}

// Markov numbers below `bound`, from the tree (a, b, c) -> (a, b, 3ab - c).
inline std::set<long> markov_numbers(long bound) {
    std::set<long> out;
    std::vector<std::array<long, 3>> todo{{1, 1, 1}};
    std::set<std::array<long, 3>> seen;
    while (!todo.empty()) {
        auto t = todo.back();
        todo.pop_back();
        std::sort(t.begin(), t.end());
        if (!seen.insert(t).second) continue;
        for (long x : t)
            if (x < bound) out.insert(x);
        for (int i = 0; i < 3; ++i) {
            long a = t[(i + 1) % 3], b = t[(i + 2) % 3];
            long c = 3 * a * b - t[i];
            if (c > 0 && c < bound * 4) todo.push_back({a, b, c});
        }
    }
    return out;
}

inline Rational binom(long n, long k) {
    if (k < 0) return 0;  // n may be negative: the polynomial n(n-1)...(n-k+1)/k!
    Rational r = 1;
    for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

}  // namespace oracle
