#pragma once

// Independent brute-force references for the tests. Nothing here calls the
// enumeration engine: bounds come from the diagonal of the inverse Gram
// matrix (max x_i^2 on {Q <= n} is 2n (A^-1)_ii), determinants from the
// Leibniz expansion.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hermu/qform.hpp"

namespace oracle {

using hermu::Int;
using hermu::IntVec;
using hermu::QuadForm;

inline std::vector<std::vector<Int>> doubled_gram(const QuadForm& q) {
    const std::size_t n = q.nvars();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? 2 * q.coeff(i, i) : q.coeff(i, j);
    return a;
}

inline Int leibniz_det(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Int det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        Int term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
        det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

inline std::vector<std::vector<Int>> drop(const std::vector<std::vector<Int>>& a, std::size_t r, std::size_t c) {
    std::vector<std::vector<Int>> m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r) continue;
        std::vector<Int> row;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != c) row.push_back(a[i][j]);
        m.push_back(row);
    }
    return m;
}

inline bool positive_definite(const QuadForm& q) {
    const auto a = doubled_gram(q);
    for (std::size_t k = 1; k <= a.size(); ++k) {
        std::vector<std::vector<Int>> lead(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
        if (leibniz_det(lead) <= 0) return false;
    }
    return true;
}

/// Per-coordinate bounds |x_i| <= b_i valid for every x with Q(x) <= n.
inline std::vector<Int> box_bounds(const QuadForm& q, Int n) {
    const auto a = doubled_gram(q);
    const Int det = leibniz_det(a);
    std::vector<Int> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Int cof = a.size() == 1 ? 1 : leibniz_det(drop(a, i, i));
        const Int sq = (2 * n * cof) / det;  // floor: x_i^2 is an integer
        Int r = static_cast<Int>(std::sqrt(static_cast<double>(sq)));
        while (r * r > sq) --r;
        while ((r + 1) * (r + 1) <= sq) ++r;
        b[i] = r;
    }
    return b;
}

inline void for_each_in_box(const std::vector<Int>& bounds, const std::function<void(const IntVec&)>& f) {
    IntVec x(bounds.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == bounds.size()) {
            f(x);
            return;
        }
        for (Int t = -bounds[k]; t <= bounds[k]; ++t) {
            x[k] = t;
            rec(k + 1);
        }
    };
    rec(0);
}

/// Lexicographically smallest x with Q(x) == n, by box search.
inline std::optional<IntVec> box_represents(const QuadForm& q, Int n) {
    std::optional<IntVec> best;
    for_each_in_box(box_bounds(q, n), [&](const IntVec& x) {
        if (q.eval(x) == n && (!best || x < *best)) best = x;
    });
    return best;
}

/// Flags 0..limit of the values taken on the box for `limit`.
inline std::vector<bool> box_represented(const QuadForm& q, Int limit) {
    std::vector<bool> seen(static_cast<std::size_t>(limit) + 1, false);
    for_each_in_box(box_bounds(q, limit), [&](const IntVec& x) {
        const Int v = q.eval(x);
        if (v <= limit) seen[static_cast<std::size_t>(v)] = true;
    });
    return seen;
}

/// Random positive definite form with every coefficient in [lo, hi].
inline QuadForm random_definite_form(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    while (true) {
        QuadForm q(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) q.set_coeff(i, j, dist(rng));
        if (positive_definite(q)) return q;
    }
}

}  // namespace oracle
