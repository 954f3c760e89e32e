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

#include "mullersafe/safety_solver.hpp"

#include <deque>

namespace mullersafe {

Attractor attractor(const Arena& arena, Player player, const VertexSet& target) {
    const std::size_t n = arena.size();
    if (target.universe() != n) throw GameError("attractor target over a different vertex universe");

    Attractor result{target, PositionalStrategy(n)};
    std::vector<std::size_t> remaining(n);
    for (Vertex v = 0; v < n; ++v) remaining[v] = arena.successors(v).size();

    std::deque<Vertex> queue;
    for (Vertex v : target.elements()) queue.push_back(v);

    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex p : arena.predecessors(u)) {
            if (result.region.contains(p)) continue;
            if (arena.owner(p) == player) {
                result.strategy[p] = u;
            } else if (--remaining[p] > 0) {
                continue;
            }
            result.region.insert(p);
            queue.push_back(p);
        }
    }
    return result;
}

SafetySolution solve_safety(const SafetyGame& game) {
    const Arena& arena = game.arena;
    const std::size_t n = arena.size();
    if (game.safe.universe() != n) throw GameError("safe set over a different vertex universe");
    for (Vertex v = 0; v < n; ++v)
        if (arena.successors(v).empty()) throw GameError("safety game vertex " + arena.name(v) + " is terminal");

    const Player reacher = opponent(game.safety_player);
    Attractor attr = attractor(arena, reacher, game.safe.complement());

    SafetySolution sol;
    sol.safety_player = game.safety_player;
    VertexSet keep = attr.region.complement();
    if (game.safety_player == Player::zero) {
        sol.w0 = keep;
        sol.w1 = attr.region;
    } else {
        sol.w0 = attr.region;
        sol.w1 = keep;
    }
    sol.reach_strategy = std::move(attr.strategy);
    sol.safety_strategy.assign(n, std::nullopt);
    sol.allowed.assign(n, {});

    for (Vertex v : keep.elements()) {
        if (arena.owner(v) != game.safety_player) continue;
        for (Vertex w : arena.successors(v))
            if (keep.contains(w)) sol.allowed[v].push_back(w);
        if (sol.allowed[v].empty()) throw InternalError("safety player vertex in its region without a safe successor");
        sol.safety_strategy[v] = sol.allowed[v].front();
    }
    return sol;
}

} // namespace mullersafe
