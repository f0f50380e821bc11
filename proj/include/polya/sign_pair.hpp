// SPDX-License-Identifier: Apache-2.0
//
// The two-row +-1 encoding of 2D walks. Step (dx, dy) maps to the sign pair
// (dx - dy, dx + dy), so R = (+,+), L = (-,-), U = (-,+), D = (+,-). Row b's
// partial sums track x+y along the walk and row a's track x-y; a walk is a
// loop exactly when both rows balance. Restricted to balanced rows this is
// a bijection between pairs of balanced strings and loops, which is where
// the count C(2n,n)^2 comes from. Text form: '+'/'-' characters, the two
// rows joined by a comma, e.g. "+---++,++---+".
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polya/binomial.hpp"
#include "polya/errors.hpp"
#include "polya/walk.hpp"

namespace polya {

class SignString {
  public:
    SignString() = default;

    explicit SignString(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
        for (std::int8_t v : entries_)
            if (v != 1 && v != -1) throw domain_error("sign entries must be +1 or -1");
    }

    static SignString parse(std::string_view text) {
        std::vector<std::int8_t> entries;
        entries.reserve(text.size());
        for (char c : text) {
            if (c == '+')
                entries.push_back(1);
            else if (c == '-')
                entries.push_back(-1);
            else
                throw domain_error(std::string("invalid sign character '") + c + "'");
        }
        return SignString(std::move(entries));
    }

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    std::int64_t sum() const {
        std::int64_t s = 0;
        for (std::int8_t v : entries_) s += v;
        return s;
    }

    // Equally many +1 and -1 entries.
    bool balanced() const { return sum() == 0; }

    std::string str() const {
        std::string out;
        out.reserve(entries_.size());
        for (std::int8_t v : entries_) out.push_back(v > 0 ? '+' : '-');
        return out;
    }

    void push_back(int v) {
        if (v != 1 && v != -1) throw domain_error("sign entries must be +1 or -1");
        entries_.push_back(static_cast<std::int8_t>(v));
    }

    friend bool operator==(const SignString&, const SignString&) = default;

  private:
    std::vector<std::int8_t> entries_;
};

struct SignPair {
    SignString a;
    SignString b;

    static SignPair parse(std::string_view text) {
        const std::size_t comma = text.find(',');
        if (comma == std::string_view::npos)
            throw domain_error("sign pair must be two strings joined by a comma");
        if (text.find(',', comma + 1) != std::string_view::npos)
            throw domain_error("sign pair must contain exactly one comma");
        return {SignString::parse(text.substr(0, comma)), SignString::parse(text.substr(comma + 1))};
    }

    std::string str() const { return a.str() + "," + b.str(); }

    friend bool operator==(const SignPair&, const SignPair&) = default;
};

// Pair (a[i], b[i]) -> i-th step: (+,+) R, (-,-) L, (-,+) U, (+,-) D.
// Total on equal-length pairs; the result is a loop iff both rows balance.
inline Walk decode_pair(const SignPair& p) {
    if (p.a.size() != p.b.size())
        throw domain_error("sign strings must have equal length, got " +
                           std::to_string(p.a.size()) + " and " + std::to_string(p.b.size()));
    std::vector<Direction> steps;
    steps.reserve(p.a.size());
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        const bool ap = p.a[i] > 0;
        const bool bp = p.b[i] > 0;
        if (ap && bp)
            steps.push_back(Direction::right);
        else if (!ap && !bp)
            steps.push_back(Direction::left);
        else if (!ap && bp)
            steps.push_back(Direction::up);
        else
            steps.push_back(Direction::down);
    }
    return Walk(2, std::move(steps));
}

// Inverse of decode_pair: a[i] = dx - dy, b[i] = dx + dy for the i-th step.
inline SignPair encode_walk(const Walk& w) {
    if (w.dimension() != 2) throw domain_error("sign-pair encoding applies to 2D walks");
    SignPair p;
    for (Direction d : w.steps()) {
        const Displacement s = step_vector(d);
        p.a.push_back(static_cast<int>(s.x - s.y));
        p.b.push_back(static_cast<int>(s.x + s.y));
    }
    return p;
}

// Number of pairs of balanced +-1 strings of length 2n: C(2n,n)^2.
inline BigInt count_balanced_pairs(std::int64_t half_length) {
    if (half_length < 0) throw domain_error("half-length must be >= 0");
    const BigInt c = central_binomial(half_length);
    return c * c;
}

}  // namespace polya
