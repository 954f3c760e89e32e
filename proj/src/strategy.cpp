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

#include "mullersafe/strategy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace mullersafe {

MemoryStrategy::MemoryStrategy(Player player, std::size_t vertices, std::vector<std::string> state_names,
                               std::optional<Memory> bottom)
    : player_(player), vertices_(vertices), names_(std::move(state_names)), bottom_(bottom) {
    if (names_.empty()) throw GameError("a memory structure needs at least one state");
    if (bottom_ && *bottom_ >= names_.size()) throw GameError("bottom state out of range");
    init_.assign(vertices_, 0);
    update_.assign(names_.size() * vertices_, 0);
    moves_.assign(names_.size() * vertices_, {});
}

std::optional<Memory> MemoryStrategy::find_state(std::string_view name) const {
    for (Memory m = 0; m < names_.size(); ++m)
        if (names_[m] == name) return m;
    return std::nullopt;
}

Memory MemoryStrategy::update_star(std::span<const Vertex> word) const {
    if (word.empty()) throw GameError("update of the empty word is undefined");
    Memory m = init(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) m = update(m, word[i]);
    return m;
}

bool MemoryStrategy::is_deterministic() const {
    return std::all_of(moves_.begin(), moves_.end(), [](const auto& s) { return s.size() <= 1; });
}

std::vector<std::string> MemoryStrategy::check(const Arena& arena) const {
    std::vector<std::string> out;
    if (arena.size() != vertices_) {
        out.push_back("strategy is defined over " + std::to_string(vertices_) + " vertices, arena has " +
                      std::to_string(arena.size()));
        return out;
    }
    for (Vertex v = 0; v < vertices_; ++v)
        if (init_[v] >= names_.size()) out.push_back("init(" + arena.name(v) + ") out of range");
    for (Memory m = 0; m < names_.size(); ++m) {
        for (Vertex v = 0; v < vertices_; ++v) {
            if (update(m, v) >= names_.size())
                out.push_back("update(" + names_[m] + ", " + arena.name(v) + ") out of range");
            if (arena.owner(v) != player_) continue;
            auto succ = allowed(v, m);
            if (succ.empty()) out.push_back("no move at (" + arena.name(v) + ", " + names_[m] + ")");
            for (Vertex w : succ)
                if (!arena.has_edge(v, w))
                    out.push_back("move " + arena.name(v) + " -> " + (w < vertices_ ? arena.name(w) : "?") +
                                  " is not an edge");
        }
    }
    return out;
}

std::vector<Vertex> antichain_memory(const SafetyReduction& red, const SafetySolution& sol) {
    const Arena& q = red.game.arena;
    const VertexSet& win = sol.safe_region();

    VertexSet reached(q.size());
    std::deque<Vertex> queue;
    for (Vertex e : red.embed) {
        if (win.contains(e) && !reached.contains(e)) {
            reached.insert(e);
            queue.push_back(e);
        }
    }
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        auto visit = [&](Vertex w) {
            if (!reached.contains(w)) {
                reached.insert(w);
                queue.push_back(w);
            }
        };
        if (q.owner(u) == sol.safety_player) {
            visit(*sol.safety_strategy[u]);
        } else {
            for (Vertex w : q.successors(u)) visit(w);
        }
    }

    std::map<Vertex, std::vector<Vertex>> by_last;
    for (Vertex r : reached.elements()) by_last[red.last(r)].push_back(r);

    std::vector<Vertex> maximal;
    for (const auto& [last, group] : by_last) {
        for (Vertex r : group) {
            const auto& s = red.sheet(r);
            bool dominated = std::any_of(group.begin(), group.end(),
                                         [&](Vertex o) { return o != r && red.tracker.sheet_le(s, red.sheet(o)); });
            if (!dominated) maximal.push_back(r);
        }
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

namespace {

std::vector<std::string> class_names(const SafetyReduction& red, std::span<const Vertex> classes) {
    std::vector<std::string> names;
    names.reserve(classes.size() + 1);
    for (Vertex c : classes) names.push_back(red.game.arena.name(c));
    names.emplace_back("bot");
    return names;
}

} // namespace

MemoryStrategy build_antichain_strategy(const SafetyReduction& red, const SafetySolution& sol) {
    const std::vector<Vertex> rmax = antichain_memory(red, sol);
    const std::size_t n = red.embed.size();
    const Memory bottom = static_cast<Memory>(rmax.size());
    const Player player = sol.safety_player;

    // orig vertex -> memory states whose class ends in it, ascending
    std::vector<std::vector<Memory>> by_last(n);
    for (Memory i = 0; i < rmax.size(); ++i) by_last[red.last(rmax[i])].push_back(i);

    auto dominate = [&](Vertex cls) -> Memory {
        if (red.is_sink(cls)) return bottom;
        const auto& s = red.sheet(cls);
        for (Memory i : by_last[s.last])
            if (red.tracker.sheet_le(s, red.sheet(rmax[i]))) return i;
        return bottom;
    };

    MemoryStrategy strat(player, n, class_names(red, rmax), bottom);
    const Arena& arena_q = red.game.arena;
    const VertexSet& win = sol.safe_region();

    for (Vertex v = 0; v < n; ++v) strat.set_init(v, win.contains(red.embed[v]) ? dominate(red.embed[v]) : bottom);

    // Recover the original arena's successor lists from the embedded classes.
    std::vector<std::vector<Vertex>> succ(n);
    for (Vertex v = 0; v < n; ++v)
        for (const auto& [w, target] : red.transitions[red.embed[v]]) succ[v].push_back(w);

    for (Memory m = 0; m <= bottom; ++m) {
        for (Vertex v = 0; v < n; ++v) {
            Memory next = bottom;
            if (m != bottom) {
                if (auto cls = red.successor(rmax[m], v)) next = dominate(*cls);
            }
            strat.set_update(m, v, next);
        }
    }
    for (Memory m = 0; m <= bottom; ++m) {
        for (Vertex v = 0; v < n; ++v) {
            if (arena_q.owner(red.embed[v]) != player) continue;
            Vertex choice = succ[v].front();
            if (m != bottom && red.last(rmax[m]) == v) {
                for (Vertex w : succ[v]) {
                    if (strat.update(m, w) != bottom) {
                        choice = w;
                        break;
                    }
                }
            }
            strat.set_moves(v, m, {choice});
        }
    }
    return strat;
}

MemoryStrategy build_permissive_strategy(const SafetyReduction& red, const SafetySolution& sol) {
    const VertexSet& win = sol.safe_region();
    const std::vector<Vertex> states = win.elements();
    const std::size_t n = red.embed.size();
    const Memory bottom = static_cast<Memory>(states.size());
    const Player player = sol.safety_player;

    std::vector<Memory> memory_of(red.size(), bottom);
    for (Memory i = 0; i < states.size(); ++i) memory_of[states[i]] = i;

    MemoryStrategy strat(player, n, class_names(red, states), bottom);
    for (Vertex v = 0; v < n; ++v) strat.set_init(v, memory_of[red.embed[v]]);

    std::vector<std::vector<Vertex>> succ(n);
    for (Vertex v = 0; v < n; ++v)
        for (const auto& [w, target] : red.transitions[red.embed[v]]) succ[v].push_back(w);

    for (Memory m = 0; m <= bottom; ++m) {
        for (Vertex v = 0; v < n; ++v) {
            Memory next = bottom;
            if (m != bottom) {
                if (auto cls = red.successor(states[m], v)) next = memory_of[*cls];
            }
            strat.set_update(m, v, next);
        }
        for (Vertex v = 0; v < n; ++v) {
            if (red.game.arena.owner(red.embed[v]) != player) continue;
            std::vector<Vertex> allowed;
            if (m != bottom && red.last(states[m]) == v) {
                for (Vertex w : succ[v])
                    if (strat.update(m, w) != bottom) allowed.push_back(w);
            }
            if (allowed.empty()) allowed.push_back(succ[v].front());
            strat.set_moves(v, m, std::move(allowed));
        }
    }
    return strat;
}

MullerSolution solve_muller(const Arena& arena, const MullerCondition& muller, const MullerSolveOptions& options) {
    MullerSolution out;
    const std::size_t n = arena.size();
    out.w0 = VertexSet(n);
    out.w1 = VertexSet(n);

    for (Player tracked : {Player::one, Player::zero}) {
        ReductionOptions ro;
        ro.tracked_player = tracked;
        ro.max_states = options.max_states;
        const SafetyReduction red = build_safety_game(arena, muller, ro);
        const SafetySolution sol = solve_safety(red.game);
        const Player winner = opponent(tracked);
        VertexSet& region = winner == Player::zero ? out.w0 : out.w1;
        for (Vertex v = 0; v < n; ++v)
            if (sol.safe_region().contains(red.embed[v])) region.insert(v);
        (winner == Player::zero ? out.strategy_p0 : out.strategy_p1) = build_antichain_strategy(red, sol);
    }

    if (out.w0.intersects(out.w1) || (out.w0 | out.w1) != arena.all_vertices())
        throw InternalError("winning regions " + arena.format(out.w0) + " and " + arena.format(out.w1) +
                            " do not partition the vertices");
    return out;
}

namespace {

struct ScoreNode {
    Memory memory;
    ScoreSheet sheet;
    std::size_t parent;
};

struct ScoreKey {
    Memory memory;
    ScoreSheet sheet;
    friend bool operator==(const ScoreKey&, const ScoreKey&) = default;
};

struct ScoreKeyHash {
    std::size_t operator()(const ScoreKey& k) const { return ScoreSheetHash{}(k.sheet) * 31 + k.memory; }
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

std::vector<Vertex> sorted_moves(const Arena& arena, const MemoryStrategy& strat, Vertex v, Memory m) {
    if (arena.owner(v) != strat.player()) {
        auto s = arena.successors(v);
        return {s.begin(), s.end()};
    }
    auto a = strat.allowed(v, m);
    std::vector<Vertex> out(a.begin(), a.end());
    std::sort(out.begin(), out.end());
    for (Vertex w : out)
        if (!arena.has_edge(v, w))
            throw GameError("strategy move " + arena.name(v) + " -> " + std::to_string(w) + " is not an edge");
    if (out.empty()) throw GameError("strategy has no move at vertex " + arena.name(v));
    return out;
}

void check_strategy_shape(const Arena& arena, const MemoryStrategy& strat) {
    if (strat.vertex_count() != arena.size()) throw GameError("strategy and arena disagree on the vertex count");
}

} // namespace

BoundCheck verify_bounded_scores(const Arena& arena, const MullerCondition& muller, const MemoryStrategy& strat,
                                 const VertexSet& from, unsigned bound) {
    if (from.universe() != arena.size()) throw GameError("start set is not a subset of the arena's vertices");
    if (bound == 0) throw GameError("score bound must be at least 1");
    check_strategy_shape(arena, strat);

    const ScoreTracker tracker = ScoreTracker::from_sets(loops_of(muller, arena, opponent(strat.player())), bound + 1);
    std::vector<ScoreNode> nodes;
    std::unordered_map<ScoreKey, std::size_t, ScoreKeyHash> seen;
    std::deque<std::size_t> queue;

    auto witness = [&](std::size_t idx, std::optional<Vertex> extra) {
        BoundCheck r{false, {}};
        if (extra) r.witness.push_back(*extra);
        for (std::size_t i = idx; i != kNoParent; i = nodes[i].parent) r.witness.push_back(nodes[i].sheet.last);
        std::reverse(r.witness.begin(), r.witness.end());
        return r;
    };

    for (Vertex v : from.elements()) {
        ScoreSheet sheet = tracker.sheet_init(v);
        if (sheet.max_score() > bound) return BoundCheck{false, {v}};
        ScoreKey key{strat.init(v), sheet};
        if (seen.contains(key)) continue;
        seen.emplace(key, nodes.size());
        queue.push_back(nodes.size());
        nodes.push_back({key.memory, std::move(sheet), kNoParent});
    }

    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        const Vertex v = nodes[idx].sheet.last;
        const Memory m = nodes[idx].memory;
        for (Vertex w : sorted_moves(arena, strat, v, m)) {
            ScoreSheet next = tracker.sheet_update(nodes[idx].sheet, w);
            if (next.max_score() > bound) return witness(idx, w);
            ScoreKey key{strat.update(m, w), std::move(next)};
            if (seen.contains(key)) continue;
            seen.emplace(key, nodes.size());
            queue.push_back(nodes.size());
            nodes.push_back({key.memory, std::move(key.sheet), idx});
        }
    }
    return {};
}

bool check_subsumption_bounded(const Arena& arena, const MullerCondition& muller, const MemoryStrategy& sigma,
                               const MemoryStrategy& sigma_prime, Vertex from, std::size_t depth) {
    if (from >= arena.size()) throw GameError("start vertex outside the arena");
    if (sigma.player() != sigma_prime.player()) throw GameError("strategies belong to different players");
    check_strategy_shape(arena, sigma);
    check_strategy_shape(arena, sigma_prime);

    VertexSet start(arena.size());
    start.insert(from);
    if (!verify_bounded_scores(arena, muller, sigma, start, 2).ok)
        throw GameError("candidate strategy does not keep the opponent's scores at most 2 from " + arena.name(from));

    struct Node {
        Vertex v;
        Memory m1, m2;
        auto operator<=>(const Node&) const = default;
    };
    std::map<Node, std::size_t> seen; // node -> prefix length
    std::deque<Node> queue;
    Node first{from, sigma.init(from), sigma_prime.init(from)};
    seen.emplace(first, 1);
    queue.push_back(first);

    while (!queue.empty()) {
        const Node cur = queue.front();
        queue.pop_front();
        const std::size_t len = seen[cur];
        if (len >= depth) continue;
        const auto moves = sorted_moves(arena, sigma, cur.v, cur.m1);
        if (arena.owner(cur.v) == sigma.player()) {
            auto other = sigma_prime.allowed(cur.v, cur.m2);
            for (Vertex w : moves)
                if (std::find(other.begin(), other.end(), w) == other.end()) return false;
        }
        for (Vertex w : moves) {
            Node next{w, sigma.update(cur.m1, w), sigma_prime.update(cur.m2, w)};
            if (seen.contains(next)) continue;
            seen.emplace(next, len + 1);
            queue.push_back(next);
        }
    }
    return true;
}

StrategyProduct strategy_product(const Arena& arena, const MemoryStrategy& strat, const VertexSet& from) {
    check_strategy_shape(arena, strat);
    if (from.universe() != arena.size()) throw GameError("start set is not a subset of the arena's vertices");

    StrategyProduct prod;
    std::map<std::pair<Vertex, Memory>, Vertex> index;
    std::deque<Vertex> queue;
    auto intern = [&](Vertex v, Memory m) {
        auto [it, fresh] = index.try_emplace({v, m}, static_cast<Vertex>(prod.states.size()));
        if (fresh) {
            prod.arena.add_vertex("(" + arena.name(v) + "," + strat.state_name(m) + ")", arena.owner(v));
            prod.states.emplace_back(v, m);
            queue.push_back(it->second);
        }
        return it->second;
    };

    for (Vertex v : from.elements()) intern(v, strat.init(v));
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (!queue.empty()) {
        const Vertex p = queue.front();
        queue.pop_front();
        const auto [v, m] = prod.states[p];
        for (Vertex w : sorted_moves(arena, strat, v, m)) edges.emplace_back(p, intern(w, strat.update(m, w)));
    }
    for (auto [a, b] : edges) prod.arena.add_edge(a, b);

    prod.accepting = VertexSet(prod.states.size());
    for (Vertex p = 0; p < prod.states.size(); ++p)
        if (prod.states[p].second != strat.bottom()) prod.accepting.insert(p);
    return prod;
}

} // namespace mullersafe
