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

#include <optional>
#include <vector>

namespace mullersafe {

/// `safety_player` wins a play iff it never leaves `safe`.
struct SafetyGame {
    Arena arena;
    VertexSet safe;
    Player safety_player = Player::zero;
};

/// Positional strategy: a chosen successor per vertex, where defined.
using PositionalStrategy = std::vector<std::optional<Vertex>>;

struct Attractor {
    VertexSet region;
    /// Defined for vertices of the attracting player in region ∖ target.
    PositionalStrategy strategy;
};

/// Least superset of `target` from which `player` forces a visit to `target`.
/// Linear in the size of the arena (out-degree counters).
Attractor attractor(const Arena& arena, Player player, const VertexSet& target);

struct SafetySolution {
    VertexSet w0;
    VertexSet w1;
    Player safety_player = Player::zero;
    /// For safety-player vertices of its winning region: lowest-index successor inside the region.
    PositionalStrategy safety_strategy;
    /// Attractor strategy of the opponent on its winning region.
    PositionalStrategy reach_strategy;
    /// For safety-player vertices of its winning region: every successor inside the region.
    std::vector<std::vector<Vertex>> allowed;

    const VertexSet& region(Player p) const { return p == Player::zero ? w0 : w1; }
    const VertexSet& safe_region() const { return region(safety_player); }
};

SafetySolution solve_safety(const SafetyGame& game);

} // namespace mullersafe
