// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive enumeration oracles. These count by brute force what the
// closed forms and series predict, so they stay deliberately simple:
// depth-first search with an incremental position and a taxicab prune
// (a walk further from the origin than it has steps left cannot close).
// A configurable half-length cap keeps accidental 4^20 runs impossible.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "polya/errors.hpp"
#include "polya/walk.hpp"

namespace polya {

inline int default_enumeration_cap(int dimension) {
    validate_dimension(dimension);
    return dimension == 1 ? 10 : 6;
}

namespace detail {

// Walks of `remaining` further steps from (x, y) that end at the origin.
// With `simple_only`, branches touching the origin before the last step
// are cut: what survives are the loops whose first return is the end.
inline std::uint64_t count_returns(int dimension, int remaining, std::int64_t x, std::int64_t y,
                                   bool simple_only) {
    if (remaining == 0) return (x == 0 && y == 0) ? 1 : 0;
    if (std::abs(x) + std::abs(y) > remaining) return 0;
    std::uint64_t total = 0;
    const int dirs = direction_count(dimension);
    for (int i = 0; i < dirs; ++i) {
        const Displacement s = step_vector(static_cast<Direction>(i));
        const std::int64_t nx = x + s.x;
        const std::int64_t ny = y + s.y;
        if (simple_only && remaining > 1 && nx == 0 && ny == 0) continue;
        total += count_returns(dimension, remaining - 1, nx, ny, simple_only);
    }
    return total;
}

inline int resolve_cap(int dimension, std::optional<int> cap) {
    const int limit = cap.value_or(default_enumeration_cap(dimension));
    if (limit < 0) throw domain_error("enumeration cap must be >= 0");
    return limit;
}

inline void check_cap(int half_length, int limit) {
    if (half_length > limit)
        throw resource_limit_error("enumeration of walks of length " +
                                   std::to_string(2 * half_length) +
                                   " exceeds the cap of 2n <= " + std::to_string(2 * limit));
}

}  // namespace detail

// Number of loops of length 2n, counted by exhaustive enumeration.
inline std::uint64_t enumerate_loop_count(int dimension, int half_length,
                                          std::optional<int> cap = std::nullopt) {
    validate_dimension(dimension);
    if (half_length < 0) throw domain_error("half-length must be >= 0");
    detail::check_cap(half_length, detail::resolve_cap(dimension, cap));
    if (half_length == 0) return 1;  // the trivial loop
    return detail::count_returns(dimension, 2 * half_length, 0, 0, false);
}

// Number of simple loops of length 2n. Simple loops are nontrivial, so
// n = 0 is a misuse rather than a zero.
inline std::uint64_t enumerate_simple_loop_count(int dimension, int half_length,
                                                 std::optional<int> cap = std::nullopt) {
    validate_dimension(dimension);
    if (half_length < 1)
        throw domain_error("simple loops are nontrivial; half-length must be >= 1");
    detail::check_cap(half_length, detail::resolve_cap(dimension, cap));
    return detail::count_returns(dimension, 2 * half_length, 0, 0, true);
}

// Visits every walk of exactly `length` steps, in lexicographic order over
// the canonical direction alphabet.
template <typename Visitor>
void for_each_walk(int dimension, std::size_t length, Visitor&& visit) {
    validate_dimension(dimension);
    const int dirs = direction_count(dimension);
    std::vector<Direction> steps(length, Direction::right);
    for (;;) {
        visit(Walk(dimension, steps));
        std::size_t i = length;
        while (i > 0) {
            const int next = static_cast<int>(steps[i - 1]) + 1;
            if (next < dirs) {
                steps[i - 1] = static_cast<Direction>(next);
                break;
            }
            steps[i - 1] = Direction::right;
            --i;
        }
        if (i == 0) break;
    }
}

}  // namespace polya
