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

#include "mullersafe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace mullersafe {

namespace {

using Set = std::uint32_t;

class ZielonkaSolver {
public:
    ZielonkaSolver(const Arena& arena, const MullerCondition& muller) : arena_(arena), muller_(muller) {
        succ_.resize(arena.size());
        for (Vertex v = 0; v < arena.size(); ++v)
            for (Vertex w : arena.successors(v)) succ_[v] |= Set{1} << w;
    }

    // Returns Player 0's winning region of the subgame induced by `u`.
    Set solve(Set u) {
        if (u == 0) return 0;
        const Player i = player0_wins(u) ? Player::zero : Player::one;
        const Player j = opponent(i);
        for (Set d : children(u, j)) {
            Set a = attractor(u, i, u & ~d);
            Set sub = u & ~a;
            Set sub_w0 = solve(sub);
            Set sub_wj = j == Player::zero ? sub_w0 : sub & ~sub_w0;
            if (sub_wj == 0) continue;
            Set b = attractor(u, j, sub_wj);
            Set rest = u & ~b;
            Set rest_w0 = solve(rest);
            return j == Player::zero ? (rest_w0 | b) : rest_w0;
        }
        return i == Player::zero ? u : 0;
    }

private:
    bool player0_wins(Set s) const { return muller_.player0_wins(VertexSet::from_mask(arena_.size(), s)); }

    // Maximal non-empty proper subsets of u whose classification is p.
    std::vector<Set> children(Set u, Player p) const {
        std::vector<Set> candidates;
        for (Set d = (u - 1) & u; d != 0; d = (d - 1) & u)
            if ((player0_wins(d) ? Player::zero : Player::one) == p) candidates.push_back(d);
        std::sort(candidates.begin(), candidates.end(), [](Set a, Set b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
        std::vector<Set> maximal;
        for (Set d : candidates) {
            bool covered = std::any_of(maximal.begin(), maximal.end(), [d](Set m) { return (d & m) == d; });
            if (!covered) maximal.push_back(d);
        }
        return maximal;
    }

    // Plain fixed-point attractor of `target` for p inside subgame u.
    Set attractor(Set u, Player p, Set target) const {
        Set attr = target & u;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < arena_.size(); ++v) {
                const Set bit = Set{1} << v;
                if (!(u & bit) || (attr & bit)) continue;
                const Set out = succ_[v] & u;
                const bool in = arena_.owner(v) == p ? (out & attr) != 0 : (out & ~attr) == 0;
                if (in) {
                    attr |= bit;
                    changed = true;
                }
            }
        }
        return attr;
    }

    const Arena& arena_;
    const MullerCondition& muller_;
    std::vector<Set> succ_;
};

} // namespace

Regions zielonka(const Arena& arena, const MullerCondition& muller, std::size_t max_vertices) {
    if (arena.size() > max_vertices || arena.size() > 31)
        throw GameError("zielonka: " + std::to_string(arena.size()) + " vertices exceed the guard of " +
                        std::to_string(std::min<std::size_t>(max_vertices, 31)));
    for (Vertex v = 0; v < arena.size(); ++v)
        if (arena.successors(v).empty()) throw GameError("zielonka: vertex " + arena.name(v) + " has no successor");
    ZielonkaSolver solver(arena, muller);
    const Set all = arena.size() == 0 ? 0 : static_cast<Set>((std::uint64_t{1} << arena.size()) - 1);
    const Set w0 = solver.solve(all);
    return {VertexSet::from_mask(arena.size(), w0), VertexSet::from_mask(arena.size(), all & ~w0)};
}

MullerCondition encode_as_muller(const Arena& arena, const Condition& condition, std::size_t max_vertices) {
    if (const auto* m = std::get_if<MullerCondition>(&condition)) {
        MullerCondition out = *m;
        out.normalize();
        return out;
    }
    if (std::holds_alternative<SafetyCondition>(condition) ||
        std::holds_alternative<RequestResponseCondition>(condition))
        throw GameError("encode_as_muller: " + condition_kind(condition) +
                        " conditions are not determined by the infinity set");

    MullerCondition out;
    for (const VertexSet& loop : enumerate_loops(arena, max_vertices)) {
        bool wins = false;
        if (const auto* b = std::get_if<BuchiCondition>(&condition)) {
            wins = loop.intersects(b->final_set);
        } else if (const auto* c = std::get_if<CoBuchiCondition>(&condition)) {
            wins = loop.is_subset_of(c->final_set);
        } else {
            const auto& pr = std::get<ParityCondition>(condition).priority;
            unsigned lowest = ~0u;
            for (Vertex v : loop.elements()) lowest = std::min(lowest, pr.at(v));
            wins = lowest % 2 == 0;
        }
        if (wins) out.f0.push_back(loop);
    }
    out.normalize();
    return out;
}

ConditionKind parse_condition_kind(std::string_view name) {
    if (name == "muller") return ConditionKind::muller;
    if (name == "safety") return ConditionKind::safety;
    if (name == "buchi") return ConditionKind::buchi;
    if (name == "cobuchi") return ConditionKind::cobuchi;
    if (name == "parity") return ConditionKind::parity;
    if (name == "rr") return ConditionKind::rr;
    throw GameError("unknown condition kind '" + std::string(name) + "'");
}

std::pair<Arena, Condition> random_game(const GeneratorConfig& cfg) {
    if (cfg.density < 0.0 || cfg.density > 1.0 || cfg.owner_bias < 0.0 || cfg.owner_bias > 1.0)
        throw GameError("random_game: density and owner bias must lie in [0,1]");
    std::mt19937_64 rng(cfg.seed);
    std::bernoulli_distribution owner_one(cfg.owner_bias);
    std::bernoulli_distribution edge(cfg.density);
    std::bernoulli_distribution coin(0.5);

    Arena arena;
    for (std::size_t v = 0; v < cfg.vertices; ++v)
        arena.add_vertex(std::to_string(v), owner_one(rng) ? Player::one : Player::zero);
    for (Vertex u = 0; u < cfg.vertices; ++u)
        for (Vertex v = 0; v < cfg.vertices; ++v)
            if (edge(rng)) arena.add_edge(u, v);
    for (Vertex u = 0; u < cfg.vertices; ++u)
        if (arena.successors(u).empty()) arena.add_edge(u, u);

    auto random_set = [&] {
        VertexSet s = arena.empty_set();
        for (Vertex v = 0; v < cfg.vertices; ++v)
            if (coin(rng)) s.insert(v);
        return s;
    };

    Condition condition;
    switch (cfg.kind) {
        case ConditionKind::muller: {
            MullerCondition m;
            for (const VertexSet& loop : enumerate_loops(arena))
                if (coin(rng)) m.f0.push_back(loop);
            m.normalize();
            condition = std::move(m);
            break;
        }
        case ConditionKind::safety:
            condition = SafetyCondition{random_set()};
            break;
        case ConditionKind::buchi:
            condition = BuchiCondition{random_set()};
            break;
        case ConditionKind::cobuchi:
            condition = CoBuchiCondition{random_set()};
            break;
        case ConditionKind::parity: {
            std::uniform_int_distribution<unsigned> prio(0, cfg.max_priority);
            ParityCondition p;
            for (std::size_t v = 0; v < cfg.vertices; ++v) p.priority.push_back(prio(rng));
            condition = std::move(p);
            break;
        }
        case ConditionKind::rr: {
            RequestResponseCondition rr;
            for (std::size_t k = 0; k < cfg.rr_pairs; ++k) {
                VertexSet request = random_set();
                VertexSet response = random_set();
                rr.pairs.push_back({std::move(request), std::move(response)});
            }
            condition = std::move(rr);
            break;
        }
    }
    return {std::move(arena), std::move(condition)};
}

} // namespace mullersafe
