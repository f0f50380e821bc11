// SPDX-License-Identifier: Apache-2.0
//
// Lattice walks on Z^1 and Z^2: unit steps, loop classification and the
// first-return decomposition. Walks serialize as strings over "RLUD"
// ("RL" in one dimension, canonical order R, L, U, D); the empty string
// is the trivial loop.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polya/errors.hpp"

namespace polya {

enum class Direction : std::uint8_t { right = 0, left = 1, up = 2, down = 3 };

struct Displacement {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool is_origin() const { return x == 0 && y == 0; }
    friend bool operator==(const Displacement&, const Displacement&) = default;
};

inline void validate_dimension(int dimension) {
    if (dimension != 1 && dimension != 2)
        throw domain_error("dimension must be 1 or 2, got " + std::to_string(dimension));
}

// 2d unit directions exist in dimension d.
inline int direction_count(int dimension) { return 2 * dimension; }

inline Displacement step_vector(Direction d) {
    switch (d) {
        case Direction::right: return {1, 0};
        case Direction::left: return {-1, 0};
        case Direction::up: return {0, 1};
        case Direction::down: return {0, -1};
    }
    throw domain_error("invalid direction code");
}

inline char direction_char(Direction d) { return "RLUD"[static_cast<int>(d)]; }

inline Direction direction_from_char(char c, int dimension) {
    validate_dimension(dimension);
    switch (c) {
        case 'R': return Direction::right;
        case 'L': return Direction::left;
        case 'U':
            if (dimension == 2) return Direction::up;
            break;
        case 'D':
            if (dimension == 2) return Direction::down;
            break;
        default: break;
    }
    throw domain_error(std::string("invalid step character '") + c + "' for dimension " +
                       std::to_string(dimension));
}

// A finite walk: a dimension plus an ordered sequence of unit steps.
// Immutable after construction.
class Walk {
  public:
    explicit Walk(int dimension) : dimension_(dimension) { validate_dimension(dimension); }

    Walk(int dimension, std::vector<Direction> steps)
        : dimension_(dimension), steps_(std::move(steps)) {
        validate_dimension(dimension);
        if (dimension_ == 1) {
            for (Direction d : steps_)
                if (d != Direction::right && d != Direction::left)
                    throw domain_error("1D walks may only step R or L");
        }
    }

    static Walk parse(int dimension, std::string_view text) {
        std::vector<Direction> steps;
        steps.reserve(text.size());
        for (char c : text) steps.push_back(direction_from_char(c, dimension));
        return Walk(dimension, std::move(steps));
    }

    int dimension() const { return dimension_; }
    const std::vector<Direction>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    std::string str() const {
        std::string out;
        out.reserve(steps_.size());
        for (Direction d : steps_) out.push_back(direction_char(d));
        return out;
    }

    friend bool operator==(const Walk&, const Walk&) = default;

  private:
    int dimension_;
    std::vector<Direction> steps_;
};

enum class LoopClass { not_loop, trivial_loop, simple_loop, composite_loop };

inline const char* to_string(LoopClass c) {
    switch (c) {
        case LoopClass::not_loop: return "not_loop";
        case LoopClass::trivial_loop: return "trivial_loop";
        case LoopClass::simple_loop: return "simple_loop";
        case LoopClass::composite_loop: return "composite_loop";
    }
    return "?";
}

inline Displacement displacement(const Walk& w) {
    Displacement total;
    for (Direction d : w.steps()) {
        const Displacement s = step_vector(d);
        total.x += s.x;
        total.y += s.y;
    }
    return total;
}

// Smallest k >= 1 such that the length-k prefix ends at the origin, if any.
inline std::optional<std::size_t> first_return_index(const Walk& w) {
    Displacement pos;
    std::size_t k = 0;
    for (Direction d : w.steps()) {
        const Displacement s = step_vector(d);
        pos.x += s.x;
        pos.y += s.y;
        ++k;
        if (pos.is_origin()) return k;
    }
    return std::nullopt;
}

// A loop is simple when its only return to the origin is its final step;
// every other loop splits at the first return into a simple loop followed
// by a shorter loop, which is what makes the class "composite".
inline LoopClass classify(const Walk& w) {
    if (w.empty()) return LoopClass::trivial_loop;
    if (!displacement(w).is_origin()) return LoopClass::not_loop;
    return first_return_index(w) == w.length() ? LoopClass::simple_loop
                                               : LoopClass::composite_loop;
}

}  // namespace polya
