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

#pragma once

#include "mullersafe/arena.hpp"
#include "mullersafe/oracle.hpp"
#include "mullersafe/strategy.hpp"

#include <string_view>
#include <vector>

namespace fixtures {

using namespace mullersafe;

/// The three-vertex running example: 1 belongs to Player 0, 0 and 2 to Player 1.
inline Arena running_arena() {
    Arena a;
    a.add_vertex("0", Player::one);
    a.add_vertex("1", Player::zero);
    a.add_vertex("2", Player::one);
    for (auto [u, v] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}})
        a.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return a;
}

inline MullerCondition running_muller() {
    MullerCondition m{{VertexSet(3, {0}), VertexSet(3, {2}), VertexSet(3, {0, 1, 2})}};
    m.normalize();
    return m;
}

inline std::vector<Vertex> w(std::string_view digits) {
    std::vector<Vertex> out;
    for (char c : digits) out.push_back(static_cast<Vertex>(c - '0'));
    return out;
}

/// Player 0 at 1 moves to 0 after arriving from 2 and to 2 otherwise.
inline MemoryStrategy alternating_strategy() {
    MemoryStrategy s(Player::zero, 3, {"go0", "go2"});
    s.set_init(0, 1);
    s.set_init(1, 0);
    s.set_init(2, 0);
    for (Memory m : {0u, 1u}) {
        s.set_update(m, 0, 1);
        s.set_update(m, 1, m);
        s.set_update(m, 2, 0);
    }
    s.set_moves(1, 0, {0});
    s.set_moves(1, 1, {2});
    return s;
}

/// Positional strategy for `player` given by one successor per owned vertex.
inline MemoryStrategy positional(const Arena& a, Player player, const std::vector<Vertex>& choice) {
    MemoryStrategy s(player, a.size(), {"m"});
    for (Vertex v = 0; v < a.size(); ++v) {
        s.set_init(v, 0);
        s.set_update(0, v, 0);
        if (a.owner(v) == player) s.set_moves(v, 0, {choice.at(v)});
    }
    return s;
}

inline GeneratorConfig random_config(std::uint64_t seed, std::size_t n, ConditionKind kind = ConditionKind::muller) {
    GeneratorConfig c;
    c.vertices = n;
    c.density = 0.45;
    c.owner_bias = 0.5;
    c.seed = seed;
    c.kind = kind;
    return c;
}

} // namespace fixtures
