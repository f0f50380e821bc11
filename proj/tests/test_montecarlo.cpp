// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <set>

#include "polya/montecarlo.hpp"
#include "polya/rng.hpp"

using namespace polya;

namespace {

McConfig config(int dim, std::int64_t steps, std::int64_t samples, std::uint64_t seed,
                std::int64_t streams = 1) {
    McConfig cfg;
    cfg.dimension = dim;
    cfg.max_steps = steps;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.streams = streams;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(simulate_return(config(2, 2, 0, 1)), domain_error);
    CHECK_THROWS_AS(simulate_return(config(2, 3, 10, 1)), domain_error);
    CHECK_THROWS_AS(simulate_return(config(2, 0, 10, 1)), domain_error);
    CHECK_THROWS_AS(simulate_return(config(3, 2, 10, 1)), domain_error);
    CHECK_THROWS_AS(simulate_return(config(2, 2, 10, 1, 0)), domain_error);
}

TEST_CASE("counter generator separates keys and counters") {
    std::set<std::uint64_t> keys;
    keys.insert(derive_sample_key(0, 0, 0));
    keys.insert(derive_sample_key(0, 0, 1));
    keys.insert(derive_sample_key(0, 1, 0));
    keys.insert(derive_sample_key(1, 0, 0));
    CHECK(keys.size() == 4);

    const CounterRng rng(derive_sample_key(42, 0, 0));
    CHECK(rng.word(0) != rng.word(1));
    CHECK(rng.word(0) == rng.word(0));
}

TEST_CASE("identical configs give bit-identical estimates") {
    const McConfig cfg = config(2, 8, 20000, 123, 4);
    const McEstimate a = simulate_return(cfg);
    const McEstimate b = simulate_return(cfg);
    CHECK(a == b);

    // A different stream count is a different (deterministic) experiment.
    const McEstimate c = simulate_return(config(2, 8, 20000, 123, 2));
    const McEstimate d = simulate_return(config(2, 8, 20000, 123, 2));
    CHECK(c == d);
}

TEST_CASE("streams may exceed samples") {
    const McEstimate est = simulate_return(config(2, 2, 3, 9, 8));
    CHECK(est.samples == 3);
    CHECK(est.returned_fraction >= 0.0);
    CHECK(est.returned_fraction <= 1.0);
}

TEST_CASE("known short-horizon probabilities") {
    // 1D: return by step 2 has probability 1/2; 2D: 1/4.
    const McEstimate one_d = simulate_return(config(1, 2, 100000, 5));
    CHECK(std::abs(one_d.returned_fraction - 0.5) < 0.01);
    const McEstimate two_d = simulate_return(config(2, 2, 100000, 5));
    CHECK(std::abs(two_d.returned_fraction - 0.25) < 0.01);
}

TEST_CASE("agrees with the exact six-step probability 95/256") {
    const McEstimate est = simulate_return(config(2, 6, 100000, 7));
    CHECK(std::abs(est.returned_fraction - 95.0 / 256.0) < 3.0 * est.standard_error);
}

TEST_CASE("standard error follows the binomial formula") {
    const McEstimate est = simulate_return(config(2, 2, 10, 1));
    const double f = est.returned_fraction;
    CHECK(est.standard_error == std::sqrt(f * (1.0 - f) / 10.0));
}

TEST_CASE("estimate_vs_exact produces calibrated z-scores") {
    const McComparison a = estimate_vs_exact(2, 3, 100000, 1);
    CHECK(a.exact_value == doctest::Approx(95.0 / 256.0));
    CHECK(a.z_score < 4.0);

    const McComparison b = estimate_vs_exact(1, 1, 100000, 1);
    CHECK(b.exact_value == doctest::Approx(0.5));
    CHECK(b.z_score < 4.0);

    const McComparison small = estimate_vs_exact(2, 1, 10, 1);
    CHECK(small.estimate.samples == 10);
    CHECK(small.estimate.returned_fraction >= 0.0);
    CHECK(small.estimate.returned_fraction <= 1.0);
    const double f = small.estimate.returned_fraction;
    CHECK(small.estimate.standard_error == std::sqrt(f * (1.0 - f) / 10.0));
    CHECK(small.abs_error == std::abs(f - small.exact_value));
}

TEST_CASE("z-scores stay below 4 for at least 9 of 10 consecutive seeds") {
    for (int terms : {1, 2, 3}) {
        int misses = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            if (estimate_vs_exact(2, terms, 100000, seed).z_score >= 4.0) ++misses;
        CHECK(misses <= 1);
    }
}

TEST_CASE("longer horizons never lose returns, up to noise") {
    // Return-within-L events are nested, so the estimates may only drift
    // upward beyond Monte Carlo noise.
    const std::int64_t budgets[] = {2, 4, 6, 8, 12};
    double prev = 0.0;
    double prev_se = 0.0;
    for (const std::int64_t steps : budgets) {
        const McEstimate est = simulate_return(config(2, steps, 100000, 31));
        CHECK(est.returned_fraction >= prev - 3.0 * (prev_se + est.standard_error));
        prev = est.returned_fraction;
        prev_se = est.standard_error;
    }
}
