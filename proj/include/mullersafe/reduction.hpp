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
#include "mullersafe/safety_solver.hpp"
#include "mullersafe/scoring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mullersafe {

struct ReductionOptions {
    /// Player whose loop scores are tracked; the other player plays safety.
    Player tracked_player = Player::one;
    /// Classes with a tracked score reaching this value are unsafe (2 or 3).
    unsigned threshold = 3;
    /// Upper limit on the number of quotient vertices.
    std::size_t max_states = 2'000'000;
    std::size_t max_loop_vertices = kDefaultLoopGuard;
};

/**
 * Safety game over score-sheet classes of play prefixes of a Muller game.
 *
 * Quotient vertices are numbered in breadth-first discovery order, starting
 * with the classes of the one-letter prefixes in vertex order. All classes in
 * which a tracked score reaches the threshold are merged into one sink vertex
 * carrying a self-loop.
 */
struct SafetyReduction {
    SafetyGame game;
    /// Original vertex -> class of the one-letter prefix.
    std::vector<Vertex> embed;
    /// Per quotient vertex; empty for the sink.
    std::vector<std::optional<ScoreSheet>> sheets;
    /// First-discovered prefix of each class; empty for the sink.
    std::vector<std::vector<Vertex>> representative;
    /// (original successor, quotient successor) pairs per quotient vertex, sorted.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> transitions;
    std::optional<Vertex> sink;
    Player tracked_player = Player::one;
    unsigned threshold = 3;
    std::vector<VertexSet> tracked_family;
    ScoreTracker tracker{{}};
    /// Number of distinct classes merged into the sink.
    std::size_t unsafe_classes = 0;

    std::size_t size() const { return game.arena.size(); }
    bool is_sink(Vertex q) const { return sink && *sink == q; }
    /// Last vertex of the prefixes in class q. Throws for the sink.
    Vertex last(Vertex q) const;
    const ScoreSheet& sheet(Vertex q) const;
    /// Class of wv for the class q of w, if (last(w), v) is an edge.
    std::optional<Vertex> successor(Vertex q, Vertex v) const;
};

SafetyReduction build_safety_game(const Arena& arena, const MullerCondition& muller,
                                  const ReductionOptions& options = {});

/// Class of the play prefix `word`. Throws GameError if the word is not a play
/// prefix or extends a prefix that already reached the threshold.
Vertex class_of(const SafetyReduction& red, std::span<const Vertex> word);

/// Upper bound on the quotient size for n vertices:
/// (Σ_{k=1..n} C(n,k)·k!·2^k·k!) + 1, saturating at UINT64_MAX.
std::uint64_t quotient_size_bound(std::size_t n);
/// (n!)^3, saturating at UINT64_MAX.
std::uint64_t factorial_cubed(std::size_t n);

} // namespace mullersafe
