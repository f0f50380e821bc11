// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "polya/enumerate.hpp"
#include "polya/walk.hpp"

using namespace polya;

TEST_CASE("displacement sums the step vectors") {
    CHECK(displacement(Walk::parse(2, "RULLDR")) == Displacement{0, 0});
    CHECK(displacement(Walk(2)) == Displacement{0, 0});
    CHECK(displacement(Walk::parse(1, "RR")) == Displacement{2, 0});
    CHECK(displacement(Walk::parse(2, "RUU")) == Displacement{1, 2});
}

TEST_CASE("walk text round trip and validation") {
    CHECK(Walk::parse(2, "RULLDR").str() == "RULLDR");
    CHECK(Walk::parse(1, "RLLR").str() == "RLLR");
    CHECK(Walk::parse(2, "").length() == 0);
    CHECK_THROWS_AS(Walk::parse(1, "RU"), domain_error);
    CHECK_THROWS_AS(Walk::parse(2, "RX"), domain_error);
    CHECK_THROWS_AS(Walk::parse(3, "R"), domain_error);
    CHECK_THROWS_AS(Walk(1, {Direction::up}), domain_error);
}

TEST_CASE("first return index") {
    CHECK(first_return_index(Walk::parse(1, "RLRL")) == 2);
    CHECK(first_return_index(Walk::parse(1, "RR")) == std::nullopt);
    CHECK(first_return_index(Walk::parse(2, "RULLDR")) == 6);
    CHECK(first_return_index(Walk(2)) == std::nullopt);
}

TEST_CASE("loop classification") {
    CHECK(classify(Walk(2)) == LoopClass::trivial_loop);
    CHECK(classify(Walk::parse(2, "RL")) == LoopClass::simple_loop);
    CHECK(classify(Walk::parse(2, "RLRL")) == LoopClass::composite_loop);
    CHECK(classify(Walk::parse(2, "RULLDR")) == LoopClass::simple_loop);
    CHECK(classify(Walk::parse(2, "R")) == LoopClass::not_loop);
    CHECK(classify(Walk::parse(1, "RRLL")) == LoopClass::simple_loop);

    // Independent check of the worked-example walk: no proper prefix closes.
    const Walk w = Walk::parse(2, "RULLDR");
    for (std::size_t k = 1; k < w.length(); ++k) {
        const Walk prefix(2, {w.steps().begin(), w.steps().begin() + k});
        CHECK_FALSE(displacement(prefix).is_origin());
    }
}

TEST_CASE("simple means first return at the end, exhaustively") {
    const auto check_walk = [](const Walk& w) {
        const auto ret = first_return_index(w);
        const bool simple = classify(w) == LoopClass::simple_loop;
        CHECK(simple == (w.length() > 0 && ret == w.length()));
        if (w.length() % 2 == 1) CHECK(classify(w) == LoopClass::not_loop);
    };
    for (std::size_t len = 0; len <= 6; ++len) for_each_walk(2, len, check_walk);
    for (std::size_t len = 0; len <= 8; ++len) for_each_walk(1, len, check_walk);
}

TEST_CASE("first-return decomposition splits a loop into simple + loop") {
    const auto check_walk = [](const Walk& w) {
        const LoopClass c = classify(w);
        if (c != LoopClass::simple_loop && c != LoopClass::composite_loop) return;
        const std::size_t k = *first_return_index(w);
        const Walk head(w.dimension(), {w.steps().begin(), w.steps().begin() + k});
        const Walk tail(w.dimension(), {w.steps().begin() + k, w.steps().end()});
        CHECK(classify(head) == LoopClass::simple_loop);
        CHECK(classify(tail) != LoopClass::not_loop);

        std::vector<Direction> glued = head.steps();
        glued.insert(glued.end(), tail.steps().begin(), tail.steps().end());
        CHECK(Walk(w.dimension(), glued) == w);
    };
    for (std::size_t len = 0; len <= 6; ++len) for_each_walk(2, len, check_walk);
    for (std::size_t len = 0; len <= 8; ++len) for_each_walk(1, len, check_walk);
}

TEST_CASE("enumeration oracle counts") {
    CHECK(enumerate_loop_count(2, 0) == 1);
    CHECK(enumerate_loop_count(1, 0) == 1);
    CHECK(enumerate_loop_count(2, 1) == 4);
    CHECK(enumerate_loop_count(2, 2) == 36);
    CHECK(enumerate_loop_count(1, 2) == 6);

    CHECK(enumerate_simple_loop_count(2, 1) == 4);
    CHECK(enumerate_simple_loop_count(2, 2) == 20);
    CHECK(enumerate_simple_loop_count(1, 3) == 4);
}

TEST_CASE("enumeration matches a direct sweep over all walks") {
    for (int n = 0; n <= 3; ++n) {
        std::uint64_t loops = 0;
        std::uint64_t simple = 0;
        for_each_walk(2, static_cast<std::size_t>(2 * n), [&](const Walk& w) {
            const LoopClass c = classify(w);
            if (c != LoopClass::not_loop) ++loops;
            if (c == LoopClass::simple_loop) ++simple;
        });
        CHECK(enumerate_loop_count(2, n) == loops);
        if (n > 0) CHECK(enumerate_simple_loop_count(2, n) == simple);
    }
}

TEST_CASE("loops factor through simple loops: B_n = sum P_k B_{n-k}") {
    for (int dim : {1, 2}) {
        const int n_max = dim == 1 ? 5 : 3;
        for (int n = 1; n <= n_max; ++n) {
            std::uint64_t sum = 0;
            for (int k = 1; k <= n; ++k)
                sum += enumerate_simple_loop_count(dim, k) * enumerate_loop_count(dim, n - k);
            CHECK(enumerate_loop_count(dim, n) == sum);
        }
    }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_loop_count(2, 7), resource_limit_error);
    CHECK_THROWS_AS(enumerate_loop_count(1, 11), resource_limit_error);
    CHECK_THROWS_AS(enumerate_loop_count(2, 3, 2), resource_limit_error);
    CHECK(enumerate_loop_count(2, 3, 3) == 400);
    CHECK_THROWS_AS(enumerate_simple_loop_count(2, 0), domain_error);
    CHECK_THROWS_AS(enumerate_loop_count(2, -1), domain_error);
    CHECK_THROWS_AS(enumerate_loop_count(3, 1), domain_error);
    CHECK_THROWS_AS(enumerate_loop_count(2, 1, -2), domain_error);
}
