// SPDX-License-Identifier: Apache-2.0
//
// Truncated formal power series with exact coefficient arithmetic, enough
// ring structure to invert the loop-counting identity B = P*B + 1:
//
//   simple_from_loops:  P = 1 - 1/B      (loop counts -> simple-loop counts)
//   loops_from_simple:  B = 1/(1 - P)    (and back)
//
// The reciprocal uses the O(N^2) convolution recurrence
//   g_0 = 1/c_0,   g_n = -(sum_{k=1..n} c_k g_{n-k}) / c_0,
// restricted to c_0 = +-1 so that integer series have exact integer
// reciprocals. Binary operations truncate to the smaller operand order and
// never pad: a coefficient that was not computed is not invented.
//
// The series is a template so the identical recurrences run on exact big
// integers (CountSeries) and on doubles (the weighted probability series).
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polya/binomial.hpp"
#include "polya/errors.hpp"

namespace polya {

template <typename Coeff>
class PowerSeries {
  public:
    using coeff_type = Coeff;

    // Truncation order used when callers do not say otherwise.
    static constexpr std::size_t default_order = 64;

    // The zero series of order 0.
    PowerSeries() : coeffs_(1, Coeff(0)) {}

    // Coefficients c_0..c_N; the order is N = coeffs.size() - 1.
    explicit PowerSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw domain_error("a series needs at least its constant term");
    }

    static PowerSeries zero(std::size_t order) {
        return PowerSeries(std::vector<Coeff>(order + 1, Coeff(0)));
    }

    static PowerSeries one(std::size_t order) {
        std::vector<Coeff> c(order + 1, Coeff(0));
        c[0] = Coeff(1);
        return PowerSeries(std::move(c));
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Coeff& operator[](std::size_t n) const { return coeffs_[n]; }
    Coeff& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    // Drop coefficients above `order`. Raising the order is refused rather
    // than zero-padded.
    PowerSeries truncated(std::size_t order) const {
        if (order > this->order())
            throw domain_error("cannot raise a series' truncation order");
        return PowerSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  private:
    std::vector<Coeff> coeffs_;
};

// Cauchy product, truncated to min(order f, order g).
template <typename Coeff>
PowerSeries<Coeff> series_mul(const PowerSeries<Coeff>& f, const PowerSeries<Coeff>& g) {
    const std::size_t order = std::min(f.order(), g.order());
    std::vector<Coeff> out(order + 1, Coeff(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (f[i] == Coeff(0)) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += f[i] * g[j];
    }
    return PowerSeries<Coeff>(std::move(out));
}

// g with f*g = 1 up to the truncation order. Requires c_0 = +-1.
template <typename Coeff>
PowerSeries<Coeff> series_reciprocal(const PowerSeries<Coeff>& f) {
    const Coeff& c0 = f[0];
    if (!(c0 == Coeff(1) || c0 == Coeff(-1)))
        throw domain_error("series reciprocal requires constant term +1 or -1");
    std::vector<Coeff> g(f.order() + 1, Coeff(0));
    g[0] = c0;  // 1/c0 = c0 when c0 = +-1
    for (std::size_t n = 1; n <= f.order(); ++n) {
        Coeff acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += f[k] * g[n - k];
        g[n] = -acc * c0;
    }
    return PowerSeries<Coeff>(std::move(g));
}

// P = 1 - 1/B. Coefficient n of the result is the simple-loop count P_n
// when B carries the loop counts B_n.
template <typename Coeff>
PowerSeries<Coeff> simple_from_loops(const PowerSeries<Coeff>& loops) {
    if (!(loops[0] == Coeff(1)))
        throw domain_error("loop series must have constant term 1 (the trivial loop)");
    const PowerSeries<Coeff> inv = series_reciprocal(loops);
    std::vector<Coeff> p(loops.order() + 1, Coeff(0));
    for (std::size_t n = 1; n <= loops.order(); ++n) p[n] = -inv[n];
    return PowerSeries<Coeff>(std::move(p));
}

// B = 1/(1 - P), the inverse of simple_from_loops.
template <typename Coeff>
PowerSeries<Coeff> loops_from_simple(const PowerSeries<Coeff>& simple) {
    if (!(simple[0] == Coeff(0)))
        throw domain_error("simple-loop series must have constant term 0");
    std::vector<Coeff> one_minus(simple.order() + 1, Coeff(0));
    one_minus[0] = Coeff(1);
    for (std::size_t n = 1; n <= simple.order(); ++n) one_minus[n] = -simple[n];
    return series_reciprocal(PowerSeries<Coeff>(std::move(one_minus)));
}

// Loop-count series with exact arbitrary-precision integer coefficients.
using CountSeries = PowerSeries<BigInt>;

}  // namespace polya
