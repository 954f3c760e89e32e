/*
 * Copyright 2026 The mullersafe Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fixtures.hpp"
#include "naive_oracles.hpp"

#include "mullersafe/oracle.hpp"
#include "mullersafe/reduction.hpp"

#include <doctest.h>

#include <cmath>

using namespace mullersafe;
using fixtures::w;

namespace {

// Sum over k of C(n,k) * k! * 2^k * k!, plus one, in floating point.
double lar_bound(int n) {
    double sum = 0;
    for (int k = 1; k <= n; ++k) {
        double binom = 1, fact = 1;
        for (int i = 1; i <= k; ++i) {
            binom = binom * (n - k + i) / i;
            fact *= i;
        }
        sum += binom * fact * std::pow(2.0, k) * fact;
    }
    return sum + 1;
}

double fact_cubed(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f * f * f;
}

std::vector<std::string> names(const Arena& a) {
    std::vector<std::string> out;
    for (Vertex v = 0; v < a.size(); ++v) out.push_back(a.name(v));
    return out;
}

} // namespace

TEST_CASE("running example quotient") {
    const Arena a = fixtures::running_arena();
    SafetyReduction red = build_safety_game(a, fixtures::running_muller());
    const Arena& q = red.game.arena;
    CHECK(red.size() == 20);
    CHECK(red.unsafe_classes == 4);
    CHECK(red.game.safety_player == Player::zero);
    CHECK(names(q) == std::vector<std::string>{"[0]",    "[1]",     "[2]",     "[01]",    "[10]",    "[12]",   "[21]",
                                               "[010]",  "[101]",   "[121]",   "[122]",   "[0101]",  "[1010]", "[1212]",
                                               "[1221]", "[01010]", "[10101]", "[12121]", "[12122]", "sink"});
    REQUIRE(red.sink.has_value());
    CHECK(red.is_sink(19));
    CHECK(q.owner(19) == Player::one);
    CHECK(q.has_edge(19, 19));
    CHECK(red.game.safe == VertexSet::full(20) - VertexSet(20, {19}));
    for (Vertex v = 0; v < 3; ++v) {
        CHECK(red.embed[v] == v);
        CHECK(red.game.safe.contains(red.embed[v]));
        CHECK(class_of(red, std::vector<Vertex>{v}) == red.embed[v]);
    }
    CHECK(class_of(red, w("10012")) == class_of(red, w("12")));
    CHECK(class_of(red, w("1001")) == class_of(red, w("0101")));
    CHECK(class_of(red, w("100101")) == *red.sink);
    CHECK_THROWS_AS(class_of(red, w("02")), GameError);
    CHECK_THROWS_AS(class_of(red, w("1001010")), GameError);
    CHECK(red.successor(class_of(red, w("1001")), 2) == class_of(red, w("12")));
    CHECK_FALSE(red.successor(class_of(red, w("10")), 2).has_value());
    CHECK(red.last(class_of(red, w("1001"))) == 1);
    CHECK(red.sheet(class_of(red, w("1001"))).entries[0].score == 2);
    CHECK_THROWS_AS(red.last(*red.sink), GameError);
}

TEST_CASE("reduction edge cases") {
    Arena single;
    single.add_vertex("v", Player::zero);
    single.add_edge(0, 0);
    SafetyReduction red = build_safety_game(single, MullerCondition{{VertexSet(1, {0})}});
    CHECK(red.size() == 1);
    CHECK_FALSE(red.sink.has_value());
    CHECK(red.game.safe == VertexSet::full(1));

    const Arena a = fixtures::running_arena();
    ReductionOptions opts;
    opts.threshold = 4;
    CHECK_THROWS_AS(build_safety_game(a, fixtures::running_muller(), opts), GameError);
    opts.threshold = 3;
    opts.max_states = 10;
    CHECK_THROWS_WITH_AS(build_safety_game(a, fixtures::running_muller(), opts), doctest::Contains("10"), GameError);

    opts = {};
    opts.threshold = 2;
    SafetyReduction r2 = build_safety_game(a, fixtures::running_muller(), opts);
    CHECK(r2.size() == 12);
    CHECK(r2.unsafe_classes == 4);

    // Tracking Player 0: the sink belongs to Player 0 so the safety player never owns it.
    opts = {};
    opts.tracked_player = Player::zero;
    SafetyReduction r0 = build_safety_game(a, fixtures::running_muller(), opts);
    CHECK(r0.game.safety_player == Player::one);
    CHECK(r0.tracked_family.size() == 3);
}

TEST_CASE("size bound values") {
    CHECK(quotient_size_bound(3) == 343);
    CHECK(factorial_cubed(3) == 216);
    for (int n = 1; n <= 8; ++n) {
        CHECK(static_cast<double>(quotient_size_bound(n)) == lar_bound(n));
        CHECK(static_cast<double>(factorial_cubed(n)) == fact_cubed(n));
        if (n >= 4) CHECK(quotient_size_bound(n) <= factorial_cubed(n));
    }
    CHECK(quotient_size_bound(100) == UINT64_MAX);
    CHECK(factorial_cubed(100) == UINT64_MAX);
}

TEST_CASE("quotient agrees with naive word search") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto [a, cond] = random_game(fixtures::random_config(seed, 2 + seed % 4));
        const auto& m = std::get<MullerCondition>(cond);
        for (Player tracked : {Player::one, Player::zero})
            for (unsigned threshold : {2u, 3u}) {
                ReductionOptions opts;
                opts.tracked_player = tracked;
                opts.threshold = threshold;
                SafetyReduction red = build_safety_game(a, m, opts);
                naive::Quotient nq = naive::quotient(a, naive::tracked_family(a, m, tracked), threshold);
                CHECK(red.size() == nq.vertices);
                CHECK(red.unsafe_classes == nq.unsafe_classes);
                CHECK(red.size() <= quotient_size_bound(a.size()));

                const Arena& q = red.game.arena;
                for (Vertex c = 0; c < red.size(); ++c) {
                    if (red.is_sink(c)) continue;
                    CHECK(q.owner(c) == a.owner(red.last(c)));
                    CHECK(red.game.safe.contains(c));
                    CHECK(red.transitions[c].size() == a.successors(red.last(c)).size());
                    for (auto [v, d] : red.transitions[c]) {
                        CHECK(a.has_edge(red.last(c), v));
                        CHECK(q.has_edge(c, d));
                        if (!red.is_sink(d)) CHECK(red.last(d) == v);
                    }
                    // The representative word lands in its own class.
                    CHECK(class_of(red, red.representative[c]) == c);
                }
            }
    }
}

TEST_CASE("quotient construction is deterministic") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        auto [a, cond] = random_game(fixtures::random_config(seed, 4));
        const auto& m = std::get<MullerCondition>(cond);
        SafetyReduction r1 = build_safety_game(a, m), r2 = build_safety_game(a, m);
        CHECK(names(r1.game.arena) == names(r2.game.arena));
        CHECK(r1.transitions == r2.transitions);
    }
}

TEST_CASE("embedding preserves winners") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto [a, cond] = random_game(fixtures::random_config(seed, 3 + seed % 3));
        const auto& m = std::get<MullerCondition>(cond);
        Regions z = zielonka(a, m);
        for (Player tracked : {Player::one, Player::zero}) {
            ReductionOptions opts;
            opts.tracked_player = tracked;
            SafetyReduction red = build_safety_game(a, m, opts);
            SafetySolution sol = solve_safety(red.game);
            for (Vertex v = 0; v < a.size(); ++v) {
                CHECK(sol.w0.contains(red.embed[v]) == z.w0.contains(v));
                CHECK(sol.w1.contains(red.embed[v]) == z.w1.contains(v));
            }
            // Threshold 2 is sound for the safety player.
            opts.threshold = 2;
            SafetyReduction red2 = build_safety_game(a, m, opts);
            SafetySolution sol2 = solve_safety(red2.game);
            const Player sp = opponent(tracked);
            for (Vertex v = 0; v < a.size(); ++v)
                if (sol2.region(sp).contains(red2.embed[v])) CHECK((sp == Player::zero ? z.w0 : z.w1).contains(v));
        }
    }
}
