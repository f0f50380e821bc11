// SPDX-License-Identifier: Apache-2.0
//
// Closed-form loop counts, weighted (probability) coefficients, partial
// sums of the return probability, and asymptotic checks.
//
// Notation used throughout: B_n loops of length 2n, P_n simple loops,
// b_n = B_n / (2d)^(2n) and p_n = P_n / (2d)^(2n) their probability
// weights, r_N = sum_{n<=N} p_n the probability of returning within 2N
// steps. In one dimension B_n = C(2n,n) and b_n ~ 1/sqrt(pi n); in two
// dimensions B_n = C(2n,n)^2 and b_n ~ 1/(pi n), so sum b_n diverges and
// the full return probability is 1.
//
// Exact mode works in big rationals (denominators up to 16^N stay cheap
// for N <= 64). Float mode runs the same recurrences in doubles: the
// multiplicative ratio w_n = w_{n-1} * (2n-1)/(2n) for weighted loop
// coefficients, and the series reciprocal on weighted coefficients for
// p_n, where every term lies in [0, 1]. Ratios against the asymptotic
// predictions go through std::lgamma, since C(2n,n) for n ~ 1000 has far
// too many digits for a double.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "polya/binomial.hpp"
#include "polya/errors.hpp"
#include "polya/series.hpp"
#include "polya/walk.hpp"

namespace polya {

enum class NumericMode { exact, floating };

// Largest N for which exact-rational partial sums are computed by default.
inline constexpr int default_exact_threshold = 64;

// A walk of length 2n has probability (2d)^(-2n); this is the base.
inline int weight_base(int dimension) {
    validate_dimension(dimension);
    return dimension == 1 ? 4 : 16;
}

// B_n: C(2n,n) in one dimension, C(2n,n)^2 in two.
inline BigInt closed_form_loop_count(int dimension, std::int64_t n) {
    validate_dimension(dimension);
    if (n < 0) throw domain_error("half-length must be >= 0");
    const BigInt c = central_binomial(n);
    return dimension == 1 ? c : c * c;
}

// The series 1 + B_1 t + ... + B_order t^order from the closed form.
inline CountSeries closed_form_loop_series(int dimension, std::size_t order) {
    validate_dimension(dimension);
    std::vector<BigInt> coeffs(order + 1);
    BigInt c = 1;  // C(2n, n), updated by C(2n,n) = C(2n-2,n-1) * (4n-2)/n
    coeffs[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        c *= 4 * static_cast<std::int64_t>(n) - 2;
        c /= static_cast<std::int64_t>(n);
        coeffs[n] = dimension == 1 ? c : c * c;
    }
    return CountSeries(std::move(coeffs));
}

// P_1 t + ... + P_order t^order by inverting the closed-form loop series.
inline CountSeries simple_loop_series(int dimension, std::size_t order) {
    return simple_from_loops(closed_form_loop_series(dimension, order));
}

// b_0..b_n via the stable ratio recurrence, in doubles.
inline std::vector<double> weighted_loop_coeffs(int dimension, std::size_t n_max) {
    validate_dimension(dimension);
    std::vector<double> b(n_max + 1);
    b[0] = 1.0;
    double w = 1.0;  // C(2n,n)/4^n
    for (std::size_t n = 1; n <= n_max; ++n) {
        w *= static_cast<double>(2 * n - 1) / static_cast<double>(2 * n);
        b[n] = dimension == 1 ? w : w * w;
    }
    return b;
}

// p_0..p_n in doubles: the identical reciprocal recurrence as the exact
// series, run on the weighted coefficients (p = 1 - 1/b termwise in the
// series sense). Fixed summation order, so results are bit-reproducible.
inline std::vector<double> weighted_simple_coeffs(int dimension, std::size_t n_max) {
    const PowerSeries<double> b(weighted_loop_coeffs(dimension, n_max));
    return simple_from_loops(b).coeffs();
}

struct WeightedCoefficient {
    int dimension = 0;
    std::int64_t n = 0;
    NumericMode mode = NumericMode::exact;
    BigRational exact = 0;  // meaningful in exact mode only
    double value = 0.0;
};

// b_n = B_n / (2d)^(2n).
inline WeightedCoefficient weighted_loop_coeff(int dimension, std::int64_t n, NumericMode mode) {
    validate_dimension(dimension);
    if (n < 0) throw domain_error("index must be >= 0");
    WeightedCoefficient out{dimension, n, mode, 0, 0.0};
    if (mode == NumericMode::exact) {
        BigInt denom = 1;
        for (std::int64_t k = 0; k < n; ++k) denom *= weight_base(dimension);
        out.exact = BigRational(closed_form_loop_count(dimension, n), denom);
        out.value = static_cast<double>(out.exact);
    } else {
        out.value = weighted_loop_coeffs(dimension, static_cast<std::size_t>(n)).back();
    }
    return out;
}

struct ReturnProbability {
    int dimension = 0;
    int terms = 0;
    NumericMode mode = NumericMode::exact;
    BigRational exact = 0;  // meaningful in exact mode only
    double value = 0.0;
};

// r_N = sum_{n=1..N} P_n / (2d)^(2n), the probability of returning to the
// origin within 2N steps. Exact mode inverts the integer series and sums
// rationals; it refuses N beyond `exact_threshold`.
inline ReturnProbability return_probability(int dimension, int terms,
                                            NumericMode mode = NumericMode::exact,
                                            int exact_threshold = default_exact_threshold) {
    validate_dimension(dimension);
    if (terms < 1) throw domain_error("terms must be >= 1");
    ReturnProbability out{dimension, terms, mode, 0, 0.0};
    if (mode == NumericMode::exact) {
        if (terms > exact_threshold)
            throw resource_limit_error("exact mode is capped at " +
                                       std::to_string(exact_threshold) +
                                       " terms; use float mode or raise the threshold");
        const CountSeries p = simple_loop_series(dimension, static_cast<std::size_t>(terms));
        const int base = weight_base(dimension);
        BigInt denom = 1;
        BigRational r = 0;
        for (int n = 1; n <= terms; ++n) {
            denom *= base;
            r += BigRational(p[static_cast<std::size_t>(n)], denom);
        }
        out.exact = r;
        out.value = static_cast<double>(r);
    } else {
        const std::vector<double> p =
            weighted_simple_coeffs(dimension, static_cast<std::size_t>(terms));
        double r = 0.0;
        for (int n = 1; n <= terms; ++n) r += p[static_cast<std::size_t>(n)];
        out.value = r;
    }
    return out;
}

struct AsymptoticReport {
    int dimension = 0;
    std::int64_t n = 0;
    double weighted_coefficient = 0.0;  // b_n
    double predicted = 0.0;             // 1/sqrt(pi n) or 1/(pi n)
    double ratio = 0.0;                 // b_n / predicted
};

// How close b_n is to its asymptotic prediction. Everything is computed in
// log space via lgamma and exponentiated at the end.
inline AsymptoticReport asymptotic_ratio(int dimension, std::int64_t n) {
    validate_dimension(dimension);
    if (n < 1) throw domain_error("index must be >= 1");
    const double nn = static_cast<double>(n);
    const double log_w =
        std::lgamma(2.0 * nn + 1.0) - 2.0 * std::lgamma(nn + 1.0) - 2.0 * nn * std::numbers::ln2;
    const double log_coeff = dimension * log_w;
    const double log_pred = (dimension == 1 ? -0.5 : -1.0) * std::log(std::numbers::pi * nn);
    return {dimension, n, std::exp(log_coeff), std::exp(log_pred), std::exp(log_coeff - log_pred)};
}

// sum_{n=0..N} b_n in doubles. Grows like 2*sqrt(N/pi) in one dimension
// and like (ln N)/pi in two: divergent either way, which is the whole
// point of the quantity.
inline double weighted_loop_partial_sum(int dimension, std::int64_t n_max) {
    validate_dimension(dimension);
    if (n_max < 0) throw domain_error("index must be >= 0");
    double sum = 1.0;
    double w = 1.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        w *= static_cast<double>(2 * n - 1) / static_cast<double>(2 * n);
        sum += dimension == 1 ? w : w * w;
    }
    return sum;
}

// Finite-N shadow of r = 1 - 1/lim b(x): checks
//   1 - 1/(sum_{n<=N} b_n)  <=  r_N  <=  1.
// The lower bound holds because the partial sums of b dominate the
// convolution p*b truncated at N.
inline bool recurrence_identity_check(int dimension, int terms) {
    validate_dimension(dimension);
    if (terms < 1) throw domain_error("terms must be >= 1");
    const double r =
        return_probability(dimension, terms, NumericMode::floating).value;
    const double s = weighted_loop_partial_sum(dimension, terms);
    return r >= 1.0 - 1.0 / s && r <= 1.0;
}

}  // namespace polya
