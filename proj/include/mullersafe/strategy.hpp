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
#include "mullersafe/reduction.hpp"
#include "mullersafe/safety_solver.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mullersafe {

using Memory = std::uint32_t;

/**
 * Finite-state strategy given by a memory structure (states, init, update) and
 * a next-move function. The next-move function returns a non-empty set of
 * successors; the strategy is deterministic when every set is a singleton, and
 * a multi-strategy otherwise.
 *
 * Tables are total: `update` is defined for every (state, vertex) pair and
 * `moves` for every state and every vertex owned by `player`.
 */
class MemoryStrategy {
public:
    MemoryStrategy() = default;
    MemoryStrategy(Player player, std::size_t vertices, std::vector<std::string> state_names,
                   std::optional<Memory> bottom = std::nullopt);

    Player player() const { return player_; }
    std::size_t vertex_count() const { return vertices_; }
    std::size_t state_count() const { return names_.size(); }
    const std::string& state_name(Memory m) const { return names_.at(m); }
    std::optional<Memory> find_state(std::string_view name) const;
    std::optional<Memory> bottom() const { return bottom_; }

    Memory init(Vertex v) const { return init_.at(v); }
    Memory update(Memory m, Vertex v) const { return update_.at(m * vertices_ + v); }
    std::span<const Vertex> allowed(Vertex v, Memory m) const { return moves_.at(m * vertices_ + v); }
    Vertex next_move(Vertex v, Memory m) const { return allowed(v, m).front(); }

    /// Memory after reading the whole non-empty word.
    Memory update_star(std::span<const Vertex> word) const;
    bool is_deterministic() const;

    void set_init(Vertex v, Memory m) { init_.at(v) = m; }
    void set_update(Memory m, Vertex v, Memory next) { update_.at(m * vertices_ + v) = next; }
    void set_moves(Vertex v, Memory m, std::vector<Vertex> succ) { moves_.at(m * vertices_ + v) = std::move(succ); }

    /// Messages for table entries that break the invariants against `arena`; empty iff consistent.
    std::vector<std::string> check(const Arena& arena) const;

private:
    Player player_ = Player::zero;
    std::size_t vertices_ = 0;
    std::vector<std::string> names_;
    std::optional<Memory> bottom_;
    std::vector<Memory> init_;
    std::vector<Memory> update_;
    std::vector<std::vector<Vertex>> moves_;
};

/// ≤-maximal classes among those reachable from the safety player's embedded
/// winning vertices under its positional safety strategy, in index order.
std::vector<Vertex> antichain_memory(const SafetyReduction& red, const SafetySolution& sol);

/**
 * Finite-state winning strategy for the safety player of `red` whose memory
 * states are the classes of `antichain_memory(red, sol)` (state i is class i of
 * that list) plus a trailing ⊥ state. Memory is updated to the lowest-index
 * maximal class above the exact class; ties in moves go to the lowest vertex.
 */
MemoryStrategy build_antichain_strategy(const SafetyReduction& red, const SafetySolution& sol);

/**
 * Multi-strategy for the safety player of `red` whose memory states are the
 * classes of its winning region (in index order) plus a trailing ⊥ state. It
 * allows exactly the moves that keep the exact class inside the winning region.
 */
MemoryStrategy build_permissive_strategy(const SafetyReduction& red, const SafetySolution& sol);

struct MullerSolution {
    VertexSet w0;
    VertexSet w1;
    MemoryStrategy strategy_p0;
    MemoryStrategy strategy_p1;
};

struct MullerSolveOptions {
    std::size_t max_states = 2'000'000;
};

/// Winning regions of both players via two safety reductions (one per tracked
/// player) and antichain strategies for both. Throws InternalError if the
/// regions do not partition the vertices.
MullerSolution solve_muller(const Arena& arena, const MullerCondition& muller, const MullerSolveOptions& options = {});

struct BoundCheck {
    bool ok = true;
    /// Shortest, lexicographically least play prefix driving an opponent score above the bound.
    std::vector<Vertex> witness;
};

/// Checks that every play consistent with `strat` starting in `from` keeps the
/// opponent's loop scores at most `bound`.
BoundCheck verify_bounded_scores(const Arena& arena, const MullerCondition& muller, const MemoryStrategy& strat,
                                 const VertexSet& from, unsigned bound);

/// True iff every play prefix of length at most `depth` from `from` consistent
/// with `sigma` is consistent with `sigma_prime`. Throws GameError unless
/// `sigma` keeps the opponent's scores at most 2 from `from`.
bool check_subsumption_bounded(const Arena& arena, const MullerCondition& muller, const MemoryStrategy& sigma,
                               const MemoryStrategy& sigma_prime, Vertex from, std::size_t depth);

/// Reachable part of the arena expanded with the strategy's memory, restricted
/// to the strategy's moves. Accepting states are those whose memory is not ⊥.
struct StrategyProduct {
    Arena arena;
    VertexSet accepting;
    std::vector<std::pair<Vertex, Memory>> states;
};

StrategyProduct strategy_product(const Arena& arena, const MemoryStrategy& strat, const VertexSet& from);

} // namespace mullersafe
