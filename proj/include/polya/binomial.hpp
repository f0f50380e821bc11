// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "polya/errors.hpp"

namespace polya {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(n, k) by the multiplicative rule. Every intermediate value is itself a
// binomial coefficient C(n-k+i, i), so the divisions are exact.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

// C(2n, n), the number of balanced +-1 strings of length 2n.
inline BigInt central_binomial(std::int64_t n) {
    if (n < 0) throw domain_error("central_binomial: n must be >= 0");
    return binomial(2 * n, n);
}

}  // namespace polya
