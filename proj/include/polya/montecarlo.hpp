// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo walker: estimates the probability that a uniform random
// lattice walk returns to the origin within a step budget.
//
// Direction sampling uses raw bits, two per step in 2D and one in 1D, so
// each direction has probability exactly 1/4 (resp. 1/2) with no modulo
// bias. 2D step t consumes bits (2(t mod 32), 2(t mod 32)+1) of word
// floor(t/32); 1D step t consumes bit t mod 64 of word floor(t/64). The
// 2-bit index maps to the canonical direction order R, L, U, D.
//
// Sample j draws its words from the key (seed, j mod streams, j) of the
// counter generator in rng.hpp. Estimates therefore depend only on the
// config, never on thread scheduling; worker threads just partition the
// sample range and add up exact integer hit counts.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "polya/analysis.hpp"
#include "polya/errors.hpp"
#include "polya/rng.hpp"
#include "polya/walk.hpp"

namespace polya {

struct McConfig {
    int dimension = 2;
    std::int64_t max_steps = 2;  // L, even and >= 2
    std::int64_t samples = 1;    // S >= 1
    std::uint64_t seed = 0;
    std::int64_t streams = 1;    // W >= 1
};

struct McEstimate {
    double returned_fraction = 0.0;
    std::int64_t returned = 0;
    std::int64_t samples = 0;
    double standard_error = 0.0;  // sqrt(f(1-f)/S)

    friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

inline void validate(const McConfig& cfg) {
    validate_dimension(cfg.dimension);
    if (cfg.max_steps < 2 || cfg.max_steps % 2 != 0)
        throw domain_error("max_steps must be even and >= 2");
    if (cfg.samples < 1) throw domain_error("samples must be >= 1");
    if (cfg.streams < 1) throw domain_error("streams must be >= 1");
}

namespace detail {

inline bool walk_returns_within(int dimension, std::int64_t max_steps, const CounterRng& rng) {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::uint64_t word = 0;
    for (std::int64_t t = 0; t < max_steps; ++t) {
        if (dimension == 2) {
            if ((t & 31) == 0) word = rng.word(static_cast<std::uint64_t>(t) >> 5);
            switch ((word >> (2 * (t & 31))) & 3U) {
                case 0: ++x; break;
                case 1: --x; break;
                case 2: ++y; break;
                default: --y; break;
            }
            if (x == 0 && y == 0) return true;
        } else {
            if ((t & 63) == 0) word = rng.word(static_cast<std::uint64_t>(t) >> 6);
            ((word >> (t & 63)) & 1U) ? --x : ++x;
            if (x == 0) return true;
        }
    }
    return false;
}

}  // namespace detail

// Fraction of `samples` independent walks that hit the origin within
// `max_steps` steps. Bit-identical results for identical configs.
inline McEstimate simulate_return(const McConfig& cfg) {
    validate(cfg);

    const auto count_range = [&cfg](std::int64_t begin, std::int64_t end) {
        std::int64_t hits = 0;
        for (std::int64_t j = begin; j < end; ++j) {
            const std::uint64_t stream = static_cast<std::uint64_t>(j % cfg.streams);
            const CounterRng rng(
                derive_sample_key(cfg.seed, stream, static_cast<std::uint64_t>(j)));
            if (detail::walk_returns_within(cfg.dimension, cfg.max_steps, rng)) ++hits;
        }
        return hits;
    };

    std::int64_t hw = static_cast<std::int64_t>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    const std::int64_t workers = std::min({cfg.streams, cfg.samples, hw});

    std::int64_t returned = 0;
    if (workers <= 1) {
        returned = count_range(0, cfg.samples);
    } else {
        std::vector<std::int64_t> partial(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const std::int64_t chunk = (cfg.samples + workers - 1) / workers;
        for (std::int64_t w = 0; w < workers; ++w) {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min(cfg.samples, begin + chunk);
            pool.emplace_back([&partial, &count_range, w, begin, end] {
                partial[static_cast<std::size_t>(w)] = count_range(begin, end);
            });
        }
        for (std::thread& t : pool) t.join();
        for (std::int64_t p : partial) returned += p;
    }

    McEstimate est;
    est.returned = returned;
    est.samples = cfg.samples;
    est.returned_fraction =
        static_cast<double>(returned) / static_cast<double>(cfg.samples);
    const double f = est.returned_fraction;
    est.standard_error = std::sqrt(f * (1.0 - f) / static_cast<double>(cfg.samples));
    return est;
}

struct McComparison {
    int dimension = 0;
    int terms = 0;
    McEstimate estimate;
    double exact_value = 0.0;
    double abs_error = 0.0;
    double z_score = 0.0;  // |estimate - exact| in units of standard error
};

// Runs the walker with L = 2N and compares against the exact partial sum r_N.
inline McComparison estimate_vs_exact(int dimension, int terms, std::int64_t samples,
                                      std::uint64_t seed, std::int64_t streams = 1,
                                      int exact_threshold = default_exact_threshold) {
    const ReturnProbability exact =
        return_probability(dimension, terms, NumericMode::exact, exact_threshold);
    McConfig cfg;
    cfg.dimension = dimension;
    cfg.max_steps = 2 * static_cast<std::int64_t>(terms);
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.streams = streams;

    McComparison cmp;
    cmp.dimension = dimension;
    cmp.terms = terms;
    cmp.estimate = simulate_return(cfg);
    cmp.exact_value = exact.value;
    cmp.abs_error = std::abs(cmp.estimate.returned_fraction - cmp.exact_value);
    if (cmp.estimate.standard_error > 0.0)
        cmp.z_score = cmp.abs_error / cmp.estimate.standard_error;
    else
        cmp.z_score = cmp.abs_error == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return cmp;
}

}  // namespace polya
