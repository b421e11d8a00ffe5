#pragma once

// Template bodies for PointEnumerator; included from qform.hpp.

#include <cmath>

namespace hermu {

namespace detail {

/// floor(sqrt(v)) for v >= 0.
inline Int128 isqrt(Int128 v) {
    if (v <= 0) return 0;
    auto r = static_cast<Int128>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline Int128 floor_div(Int128 a, Int128 b) {
    Int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int128 ceil_div(Int128 a, Int128 b) { return -floor_div(-a, b); }

}  // namespace detail

inline bool PointEnumerator::range(std::size_t k, const Int* x, Int128 budget2, Int& lo, Int& hi) const {
    const Level& lv = levels_[k];
    const std::size_t w = n_ - k;
    const Int128 a = lv.g[0];
    Int128 h = 0;
    Int128 c = 0;
    for (std::size_t j = 1; j < w; ++j) {
        h += lv.g[j] * x[k + j];
        Int128 row = 0;
        for (std::size_t i = 1; i < w; ++i) row += lv.g[i * w + j] * x[k + i];
        c += row * x[k + j];
    }
    // a t^2 + 2 h t + c <= budget2 * D_k  <=>  (a t + h)^2 <= h^2 + a (budget2 D_k - c)
    const Int128 disc = h * h + a * (budget2 * lv.leading - c);
    if (disc < 0) return false;
    const Int128 s = detail::isqrt(disc);
    const Int128 l = detail::ceil_div(-s - h, a);
    const Int128 u = detail::floor_div(s - h, a);
    if (l > u) return false;
    lo = static_cast<Int>(l);
    hi = static_cast<Int>(u);
    return true;
}

template <class Leaf>
void PointEnumerator::walk(Int bound, Leaf&& leaf) const {
    if (bound < 0 || n_ == 0) return;
    IntVec x(n_, 0);
    const Int128 budget2 = static_cast<Int128>(bound) * 2;
    auto descend = [&](auto& self, std::size_t k) -> void {
        if (k == 0) {
            leaf(x);
            return;
        }
        Int lo, hi;
        if (!range(k, x.data(), budget2, lo, hi)) return;
        for (Int t = lo; t <= hi; ++t) {
            x[k] = t;
            self(self, k - 1);
        }
        x[k] = 0;
    };
    descend(descend, n_ - 1);
}

template <class F>
void PointEnumerator::visit(Int bound, F&& f) const {
    const IntMatrix& a = gram_;
    const std::size_t n = n_;
    const Int128 budget2 = static_cast<Int128>(bound) * 2;
    walk(bound, [&](IntVec& x) {
        Int lo, hi;
        if (!range(0, x.data(), budget2, lo, hi)) return;
        // innermost coordinate: 2Q = a00 t^2 + 2 h t + c, stepped incrementally
        Int h = 0;
        Int c = 0;
        for (std::size_t j = 1; j < n; ++j) {
            h += a(0, j) * x[j];
            Int row = 0;
            for (std::size_t i = 1; i < n; ++i) row += a(i, j) * x[i];
            c += row * x[j];
        }
        const Int a00 = a(0, 0);
        Int v2 = a00 * lo * lo + 2 * h * lo + c;
        for (Int t = lo; t <= hi; ++t) {
            x[0] = t;
            f(std::span<const Int>(x), v2 / 2);
            v2 += a00 * (2 * t + 1) + 2 * h;
        }
        x[0] = 0;
    });
}

template <class F>
void PointEnumerator::visit_value(Int value, F&& f) const {
    const IntMatrix& a = gram_;
    const std::size_t n = n_;
    walk(value, [&](IntVec& x) {
        Int128 h = 0;
        Int128 c = 0;
        for (std::size_t j = 1; j < n; ++j) {
            h += static_cast<Int128>(a(0, j)) * x[j];
            Int128 row = 0;
            for (std::size_t i = 1; i < n; ++i) row += static_cast<Int128>(a(i, j)) * x[i];
            c += row * x[j];
        }
        const Int128 a00 = a(0, 0);
        // (a00 t + h)^2 = h^2 - a00 (c - 2 value)
        const Int128 disc = h * h - a00 * (c - 2 * static_cast<Int128>(value));
        if (disc < 0) return;
        const Int128 s = detail::isqrt(disc);
        if (s * s != disc) return;
        for (Int128 num : {-h - s, -h + s}) {
            if (num % a00 == 0) {
                x[0] = static_cast<Int>(num / a00);
                f(std::span<const Int>(x));
            }
            if (s == 0) break;
        }
        x[0] = 0;
    });
}

}  // namespace hermu
