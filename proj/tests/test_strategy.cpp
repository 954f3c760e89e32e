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
#include "mullersafe/strategy.hpp"

#include <doctest.h>

#include <random>

using namespace mullersafe;
using fixtures::w;

namespace {

struct Built {
    SafetyReduction red;
    SafetySolution sol;
};

Built reduce(const Arena& a, const MullerCondition& m, Player tracked = Player::one) {
    ReductionOptions opts;
    opts.tracked_player = tracked;
    SafetyReduction red = build_safety_game(a, m, opts);
    SafetySolution sol = solve_safety(red.game);
    return {std::move(red), std::move(sol)};
}

std::vector<Vertex> allowed_vec(const MemoryStrategy& s, Vertex v, Memory m) {
    auto span = s.allowed(v, m);
    return {span.begin(), span.end()};
}

// Is the prefix consistent with the strategy at every vertex of its player?
bool consistent(const Arena& a, const MemoryStrategy& s, const std::vector<Vertex>& word) {
    Memory m = s.init(word[0]);
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (a.owner(word[i]) == s.player()) {
            auto allowed = s.allowed(word[i], m);
            if (std::find(allowed.begin(), allowed.end(), word[i + 1]) == allowed.end()) return false;
        }
        m = s.update(m, word[i + 1]);
    }
    return true;
}

std::vector<naive::Bits> masks(const std::vector<VertexSet>& sets) {
    std::vector<naive::Bits> out;
    for (const auto& s : sets) out.push_back(s.to_mask());
    return out;
}

} // namespace

TEST_CASE("memory strategy tables") {
    const Arena a = fixtures::running_arena();
    MemoryStrategy s = fixtures::alternating_strategy();
    CHECK(s.check(a).empty());
    CHECK(s.is_deterministic());
    CHECK(s.update_star(w("0")) == 1);
    CHECK(s.update_star(w("1001")) == 1);
    CHECK(s.update_star(w("121")) == 0);
    CHECK(s.next_move(1, s.update_star(w("21"))) == 0);
    CHECK(s.find_state("go2") == Memory{1});
    CHECK_FALSE(s.find_state("x").has_value());
    CHECK_THROWS_AS(s.update_star(std::vector<Vertex>{}), GameError);

    MemoryStrategy bad = s;
    bad.set_moves(1, 0, {1});
    CHECK_FALSE(bad.check(a).empty());
    MemoryStrategy multi = s;
    multi.set_moves(1, 0, {0, 2});
    CHECK_FALSE(multi.is_deterministic());
    CHECK(multi.check(a).empty());
    CHECK_THROWS_AS(MemoryStrategy(Player::zero, 3, {}), GameError);
}

TEST_CASE("solving the running example") {
    const Arena a = fixtures::running_arena();
    const auto m = fixtures::running_muller();
    MullerSolution sol = solve_muller(a, m);
    CHECK(sol.w0 == a.all_vertices());
    CHECK(sol.w1.empty());
    CHECK(sol.strategy_p0.player() == Player::zero);
    CHECK(sol.strategy_p1.player() == Player::one);
    CHECK(verify_bounded_scores(a, m, sol.strategy_p0, sol.w0, 2).ok);

    MullerSolution all = solve_muller(a, MullerCondition{enumerate_loops(a)});
    CHECK(all.w0 == a.all_vertices());
    MullerSolution none = solve_muller(a, MullerCondition{});
    CHECK(none.w1 == a.all_vertices());
}

TEST_CASE("antichain strategy of the running example") {
    const Arena a = fixtures::running_arena();
    const auto m = fixtures::running_muller();
    auto [red, sol] = reduce(a, m);
    std::vector<Vertex> rmax = antichain_memory(red, sol);
    MemoryStrategy s = build_antichain_strategy(red, sol);
    CHECK(s.check(a).empty());
    CHECK(s.is_deterministic());
    CHECK(s.state_count() == rmax.size() + 1);
    REQUIRE(s.bottom().has_value());
    CHECK(*s.bottom() == rmax.size());
    for (std::size_t i = 0; i < rmax.size(); ++i) {
        CHECK(s.state_name(static_cast<Memory>(i)) == red.game.arena.name(rmax[i]));
        CHECK(sol.safe_region().contains(rmax[i]));
        for (std::size_t j = 0; j < rmax.size(); ++j)
            if (i != j) CHECK_FALSE(red.tracker.sheet_le(red.sheet(rmax[i]), red.sheet(rmax[j])));
    }
    CHECK(verify_bounded_scores(a, m, s, a.all_vertices(), 2).ok);
    CHECK_FALSE(verify_bounded_scores(a, m, s, a.all_vertices(), 1).ok);

    StrategyProduct p = strategy_product(a, s, a.all_vertices());
    CHECK(p.accepting == VertexSet::full(p.arena.size()));
    for (auto [v, mem] : p.states) CHECK(mem != *s.bottom());
}

TEST_CASE("antichain memory without tracked loops") {
    // Every loop is won by Player 0, so nothing is tracked.
    const Arena a = fixtures::running_arena();
    auto [red, sol] = reduce(a, MullerCondition{enumerate_loops(a)});
    std::vector<Vertex> rmax = antichain_memory(red, sol);
    CHECK(rmax.size() == 3);
    std::vector<Vertex> lasts;
    for (Vertex c : rmax) lasts.push_back(red.last(c));
    std::sort(lasts.begin(), lasts.end());
    CHECK(lasts == w("012"));
}

TEST_CASE("permissive strategy of the running example") {
    const Arena a = fixtures::running_arena();
    const auto m = fixtures::running_muller();
    auto [red, sol] = reduce(a, m);
    MemoryStrategy p = build_permissive_strategy(red, sol);
    CHECK(p.check(a).empty());
    CHECK_FALSE(p.is_deterministic());
    const Arena& q = red.game.arena;
    auto state = [&](std::string_view word) {
        auto s = p.find_state(q.name(class_of(red, w(word))));
        REQUIRE(s.has_value());
        return *s;
    };
    CHECK(allowed_vec(p, 1, state("1")) == w("02"));
    CHECK(allowed_vec(p, 1, state("1001")) == w("2"));
    CHECK(allowed_vec(p, 1, *p.bottom()).size() == 1);
    CHECK(p.init(1) == state("1"));
    CHECK(p.update(state("100"), 1) == state("1001"));
    CHECK(p.state_count() == sol.safe_region().size() + 1);
    CHECK(verify_bounded_scores(a, m, p, a.all_vertices(), 2).ok);
}

TEST_CASE("score verification") {
    const Arena a = fixtures::running_arena();
    const auto m = fixtures::running_muller();
    const auto f1 = masks(f1_loops(m, a));
    MemoryStrategy alt = fixtures::alternating_strategy();
    CHECK(verify_bounded_scores(a, m, alt, a.all_vertices(), 2).ok);
    BoundCheck one = verify_bounded_scores(a, m, alt, a.all_vertices(), 1);
    CHECK_FALSE(one.ok);
    CHECK(one.witness == w("1001"));

    MemoryStrategy left = fixtures::positional(a, Player::zero, {0, 0, 0});
    for (unsigned k = 1; k <= 5; ++k) {
        BoundCheck c = verify_bounded_scores(a, m, left, a.all_vertices(), k);
        REQUIRE_FALSE(c.ok);
        CHECK(is_path(a, c.witness));
        CHECK(consistent(a, left, c.witness));
        CHECK(naive::maxscore(f1, c.witness) == k + 1);
        CHECK(occ(3, c.witness).is_subset_of(VertexSet(3, {0, 1})));
    }
    CHECK(verify_bounded_scores(a, m, left, a.empty_set(), 1).ok);
    CHECK_THROWS_AS(verify_bounded_scores(a, m, alt, a.all_vertices(), 0), GameError);
    CHECK_THROWS_AS(verify_bounded_scores(a, m, alt, VertexSet(4), 2), GameError);
}

TEST_CASE("bounded subsumption") {
    const Arena a = fixtures::running_arena();
    const auto m = fixtures::running_muller();
    auto [red, sol] = reduce(a, m);
    MemoryStrategy perm = build_permissive_strategy(red, sol);
    MemoryStrategy alt = fixtures::alternating_strategy();
    for (Vertex v = 0; v < 3; ++v) {
        CHECK(check_subsumption_bounded(a, m, alt, alt, v, 20));
        CHECK(check_subsumption_bounded(a, m, alt, perm, v, 20));
    }
    CHECK_FALSE(check_subsumption_bounded(a, m, perm, alt, 1, 20));
    MemoryStrategy left = fixtures::positional(a, Player::zero, {0, 0, 0});
    CHECK_THROWS_AS(check_subsumption_bounded(a, m, left, perm, 1, 20), GameError);
}

TEST_CASE("strategy products") {
    const Arena a = fixtures::running_arena();
    MemoryStrategy alt = fixtures::alternating_strategy();
    StrategyProduct empty = strategy_product(a, alt, a.empty_set());
    CHECK(empty.arena.size() == 0);
    StrategyProduct p = strategy_product(a, alt, VertexSet(3, {1}));
    CHECK(p.arena.name(0) == "(1,go0)");
    for (Vertex x = 0; x < p.arena.size(); ++x)
        for (Vertex y : p.arena.successors(x)) CHECK(a.has_edge(p.states[x].first, p.states[y].first));
}

TEST_CASE("built strategies on random games") {
    std::mt19937_64 rng(31);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [a, cond] = random_game(fixtures::random_config(seed, 3 + seed % 3));
        const auto& m = std::get<MullerCondition>(cond);
        Regions z = zielonka(a, m);
        MullerSolution ms = solve_muller(a, m);
        CHECK(ms.w0 == z.w0);
        CHECK(ms.w1 == z.w1);
        CHECK(verify_bounded_scores(a, m, ms.strategy_p0, ms.w0, 2).ok);
        CHECK(verify_bounded_scores(a, m, ms.strategy_p1, ms.w1, 2).ok);

        auto [red, sol] = reduce(a, m);
        MemoryStrategy perm = build_permissive_strategy(red, sol);
        CHECK(perm.check(a).empty());
        CHECK(verify_bounded_scores(a, m, perm, ms.w0, 2).ok);

        // A prefix from W0 is consistent with the permissive strategy iff all
        // classes along it are winning in the quotient.
        for (Vertex v : ms.w0.elements())
            for (int t = 0; t < 10; ++t) {
                std::vector<Vertex> word{v};
                const std::size_t len = 1 + rng() % 8;
                while (word.size() < len) {
                    auto succ = a.successors(word.back());
                    word.push_back(succ[rng() % succ.size()]);
                }
                bool all_winning = true;
                for (std::size_t n = 1; n <= word.size() && all_winning; ++n)
                    all_winning = sol.safe_region().contains(class_of(red, std::span<const Vertex>(word.data(), n)));
                CHECK(consistent(a, perm, word) == all_winning);
            }
    }
}
