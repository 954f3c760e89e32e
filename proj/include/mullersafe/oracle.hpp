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

// Reference solvers used to cross-check the score-based reduction. Nothing in
// here depends on the scoring or reduction code.

#include "mullersafe/arena.hpp"

#include <cstdint>
#include <utility>

namespace mullersafe {

struct Regions {
    VertexSet w0;
    VertexSet w1;
};

inline constexpr std::size_t kZielonkaGuard = 14;

/// Winning regions by Zielonka's recursive algorithm with explicit set
/// membership queries against f0.
Regions zielonka(const Arena& arena, const MullerCondition& muller, std::size_t max_vertices = kZielonkaGuard);

/// Muller condition equivalent to a Büchi, co-Büchi or parity condition (or a
/// Muller condition, returned as is). Throws GameError for other kinds.
MullerCondition encode_as_muller(const Arena& arena, const Condition& condition,
                                 std::size_t max_vertices = kDefaultLoopGuard);

enum class ConditionKind { muller, safety, buchi, cobuchi, parity, rr };

ConditionKind parse_condition_kind(std::string_view name);

struct GeneratorConfig {
    std::size_t vertices = 4;
    /// Probability of each ordered pair (including self-loops) being an edge.
    double density = 0.4;
    /// Probability of a vertex belonging to Player 1.
    double owner_bias = 0.5;
    std::uint64_t seed = 0;
    ConditionKind kind = ConditionKind::muller;
    /// Priorities are drawn from [0, max_priority].
    unsigned max_priority = 3;
    std::size_t rr_pairs = 1;
};

/// Seeded random game. Vertices without successors receive a self-loop.
std::pair<Arena, Condition> random_game(const GeneratorConfig& cfg);

} // namespace mullersafe
