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

#include <doctest.h>

#include <random>

using namespace mullersafe;
using fixtures::w;

namespace {

bool has_violation(const std::vector<std::string>& v, std::string_view needle) {
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("vertex sets") {
    VertexSet s(70, {1, 65});
    CHECK(s.size() == 2);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(2));
    CHECK(s.complement().size() == 68);
    CHECK((s | VertexSet(70, {2})).elements() == std::vector<Vertex>{1, 2, 65});
    CHECK((s & VertexSet(70, {65, 3})).elements() == std::vector<Vertex>{65});
    CHECK((s - VertexSet(70, {1})).elements() == std::vector<Vertex>{65});
    CHECK(VertexSet(70, {1}).is_subset_of(s));
    CHECK(VertexSet::from_mask(4, 0b1010).elements() == std::vector<Vertex>{1, 3});
    CHECK(VertexSet(4, {0, 2}).to_mask() == 0b101);
    CHECK(VertexSet(3, {0}) < VertexSet(3, {0, 1}));
    CHECK(VertexSet(3, {0, 1}) < VertexSet(3, {1}));
}

TEST_CASE("arena construction") {
    Arena a = fixtures::running_arena();
    CHECK(a.size() == 3);
    CHECK(a.edge_count() == 6);
    a.add_edge(0, 1);
    CHECK(a.edge_count() == 6);
    CHECK(a.owner(1) == Player::zero);
    CHECK(a.vertices_of(Player::one) == VertexSet(3, {0, 2}));
    CHECK(a.find("2") == Vertex{2});
    CHECK_FALSE(a.find("7").has_value());
    CHECK(a.has_edge(2, 1));
    CHECK_FALSE(a.has_edge(0, 2));
    CHECK(std::vector<Vertex>(a.predecessors(1).begin(), a.predecessors(1).end()) == std::vector<Vertex>{0, 2});
    CHECK(a.format(VertexSet(3, {0, 2})) == "{0,2}");
    CHECK(a.format(a.empty_set()) == "{}");
    CHECK(a.format_word(w("1001")) == "1001");
}

TEST_CASE("validate") {
    Arena a = fixtures::running_arena();
    CHECK(validate(a, fixtures::running_muller()).empty());

    MullerCondition bad{{VertexSet(3, {0, 2})}};
    CHECK(has_violation(validate(a, bad), "not a loop"));

    Arena t;
    t.add_vertex("x", Player::zero);
    t.add_vertex("y", Player::one);
    t.add_edge(0, 1);
    CHECK(has_violation(validate(t, SafetyCondition{t.all_vertices()}), "no outgoing edge"));
}

TEST_CASE("occ and infi") {
    CHECK(occ(3, w("10012100")) == VertexSet(3, {0, 1, 2}));
    CHECK(occ(3, w("0")) == VertexSet(3, {0}));
    CHECK(occ(3, w("1212")) == VertexSet(3, {1, 2}));
    CHECK(infi(3, {w("1"), w("01")}) == VertexSet(3, {0, 1}));
    CHECK(infi(3, {{}, w("0")}) == VertexSet(3, {0}));
    CHECK(infi(3, {w("120"), w("0")}) == VertexSet(3, {0}));
}

TEST_CASE("lasso validity and winners") {
    Arena a = fixtures::running_arena();
    Condition m = fixtures::running_muller();
    CHECK(is_path(a, w("1001")));
    CHECK_FALSE(is_path(a, w("02")));
    CHECK(is_valid_lasso(a, {w("1"), w("01")}));
    CHECK_FALSE(is_valid_lasso(a, {w("1"), w("012")}));
    CHECK(winner(a, m, {w("1"), w("01")}) == Player::one);
    CHECK(winner(a, m, {{}, w("0")}) == Player::zero);
    CHECK(winner(a, m, {{}, w("1012")}) == Player::zero);
    CHECK_THROWS_AS(winner(a, m, {{}, w("02")}), GameError);

    Arena single;
    single.add_vertex("v", Player::zero);
    single.add_edge(0, 0);
    CHECK(winner(single, ParityCondition{{0}}, {{}, {0}}) == Player::zero);
    CHECK(winner(single, ParityCondition{{1}}, {{}, {0}}) == Player::one);
}

TEST_CASE("winners of the other conditions") {
    Arena a = fixtures::running_arena();
    const Lasso l{w("1"), w("01")};
    CHECK(winner(a, SafetyCondition{VertexSet(3, {0, 1})}, l) == Player::zero);
    CHECK(winner(a, SafetyCondition{VertexSet(3, {0})}, l) == Player::one);
    CHECK(winner(a, BuchiCondition{VertexSet(3, {0})}, l) == Player::zero);
    CHECK(winner(a, BuchiCondition{VertexSet(3, {2})}, l) == Player::one);
    CHECK(winner(a, CoBuchiCondition{VertexSet(3, {0, 1})}, {w("12"), w("10")}) == Player::zero);
    CHECK(winner(a, CoBuchiCondition{VertexSet(3, {0})}, l) == Player::one);
    CHECK(winner(a, ParityCondition{{2, 1, 3}}, l) == Player::one);
    CHECK(winner(a, ParityCondition{{0, 1, 3}}, l) == Player::zero);

    // Request at 2, response at 0.
    RequestResponseCondition rr{{{VertexSet(3, {2}), VertexSet(3, {0})}}};
    CHECK(winner(a, rr, {w("2"), w("10")}) == Player::zero);
    CHECK(winner(a, rr, {w("0"), w("12")}) == Player::one);
    CHECK(winner(a, rr, {{}, w("1210")}) == Player::zero);
    CHECK(winner(a, rr, {w("12"), w("2")}) == Player::one);
    // A vertex that is request and response answers earlier requests and opens a new one.
    RequestResponseCondition both{{{VertexSet(3, {0}), VertexSet(3, {0})}}};
    CHECK(winner(a, both, {{}, w("0")}) == Player::zero);
    CHECK(winner(a, both, {w("0"), w("12")}) == Player::one);
}

TEST_CASE("loops") {
    Arena a = fixtures::running_arena();
    CHECK(is_loop(a, VertexSet(3, {0, 1, 2})));
    CHECK_FALSE(is_loop(a, VertexSet(3, {0, 2})));
    CHECK(is_loop(a, VertexSet(3, {0})));
    CHECK_FALSE(is_loop(a, VertexSet(3, {1})));
    CHECK_FALSE(is_loop(a, a.empty_set()));

    std::vector<VertexSet> expected{VertexSet(3, {0}), VertexSet(3, {0, 1}), VertexSet(3, {0, 1, 2}),
                                    VertexSet(3, {1, 2}), VertexSet(3, {2})};
    auto loops = enumerate_loops(a);
    std::sort(expected.begin(), expected.end());
    CHECK(loops == expected);

    Arena single;
    single.add_vertex("v", Player::zero);
    single.add_edge(0, 0);
    CHECK(enumerate_loops(single) == std::vector<VertexSet>{VertexSet(1, {0})});

    Arena two;
    two.add_vertex("u", Player::zero);
    two.add_vertex("v", Player::one);
    two.add_edge(0, 1);
    two.add_edge(1, 0);
    CHECK(enumerate_loops(two) == std::vector<VertexSet>{VertexSet(2, {0, 1})});

    CHECK(f1_loops(fixtures::running_muller(), a) ==
          std::vector<VertexSet>{VertexSet(3, {0, 1}), VertexSet(3, {1, 2})});
    CHECK(f1_loops(MullerCondition{loops}, a).empty());
    CHECK(f1_loops(MullerCondition{}, a) == loops);
    CHECK(loops_of(fixtures::running_muller(), a, Player::zero).size() == 3);

    Arena big;
    for (int i = 0; i < 20; ++i) big.add_vertex(std::to_string(i), Player::zero);
    for (Vertex i = 0; i < 20; ++i) big.add_edge(i, i);
    CHECK_THROWS_AS(enumerate_loops(big), GameError);
}

TEST_CASE("loop enumeration agrees with pairwise reachability") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto [a, c] = random_game(fixtures::random_config(seed, 2 + seed % 5));
        std::vector<naive::Bits> got;
        for (const auto& l : enumerate_loops(a)) got.push_back(l.to_mask());
        std::sort(got.begin(), got.end());
        CHECK(got == naive::loops(a));
        for (naive::Bits s = 0; s < (naive::Bits{1} << a.size()); ++s)
            CHECK(is_loop(a, VertexSet::from_mask(a.size(), s)) == naive::is_loop(a, s));
    }
}

TEST_CASE("winner properties on random lassos") {
    std::mt19937_64 rng(7);
    const ConditionKind kinds[] = {ConditionKind::muller,  ConditionKind::safety, ConditionKind::buchi,
                                   ConditionKind::cobuchi, ConditionKind::parity, ConditionKind::rr};
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto cfg = fixtures::random_config(seed, 3 + seed % 3, kinds[seed % 6]);
        auto [a, cond] = random_game(cfg);
        REQUIRE(validate(a, cond).empty());
        for (int t = 0; t < 10; ++t) {
            // Walk until a vertex repeats; the repeated segment is the cycle.
            auto path = naive::random_path(a, 3 * a.size() + 2, rng);
            std::size_t i = 0, j = 0;
            bool found = false;
            for (j = 1; j < path.size() && !found; ++j)
                for (i = 0; i < j; ++i)
                    if (path[i] == path[j]) {
                        found = true;
                        break;
                    }
            REQUIRE(found);
            --j;
            Lasso l{{path.begin(), path.begin() + static_cast<long>(i)},
                    {path.begin() + static_cast<long>(i), path.begin() + static_cast<long>(j)}};
            REQUIRE(is_valid_lasso(a, l));
            CHECK(is_loop(a, infi(a.size(), l)));

            const Player p = winner(a, cond, l);
            std::vector<Vertex> stem2 = l.stem;
            stem2.insert(stem2.end(), l.cycle.begin(), l.cycle.end());
            CHECK(winner(a, cond, {stem2, l.cycle}) == p);
            std::vector<Vertex> cycle2 = l.cycle;
            cycle2.insert(cycle2.end(), l.cycle.begin(), l.cycle.end());
            CHECK(winner(a, cond, {l.stem, cycle2}) == p);
            // Rotation: move the first cycle letter into the stem.
            std::vector<Vertex> stem3 = l.stem;
            stem3.push_back(l.cycle.front());
            std::vector<Vertex> rotated(l.cycle.begin() + 1, l.cycle.end());
            rotated.push_back(l.cycle.front());
            CHECK(winner(a, cond, {stem3, rotated}) == p);

            if (std::holds_alternative<MullerCondition>(cond)) {
                // Same infinity set from a different stem.
                Lasso bare{{}, l.cycle};
                CHECK(winner(a, cond, bare) == p);
            }
        }
    }
}
