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

#include "mullersafe/safety_framework.hpp"

#include "mullersafe/scoring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace mullersafe {

MonitorDFA::MonitorDFA(std::string kind, std::size_t alphabet, MonitorState start, StepFn step)
    : kind_(std::move(kind)), alphabet_(alphabet), start_(std::move(start)), step_(std::move(step)) {}

MonitorDFA MonitorDFA::universal(std::size_t alphabet) {
    return MonitorDFA("universal", alphabet, {1}, [](const MonitorState& q, Vertex) { return q; });
}

MonitorState MonitorDFA::step(const MonitorState& q, Vertex v) const {
    if (v >= alphabet_) throw GameError("letter " + std::to_string(v) + " outside the monitor alphabet");
    if (is_reject(q)) return q;
    return step_(q, v);
}

MonitorState run_dfa(const MonitorDFA& dfa, std::span<const Vertex> word) {
    MonitorState q = dfa.start();
    for (Vertex v : word) q = dfa.step(q, v);
    return q;
}

MonitorDFA buchi_monitor(const Arena& arena, const VertexSet& final_set) {
    if (final_set.universe() != arena.size()) throw GameError("final set over a different vertex universe");
    const auto k = static_cast<std::uint32_t>(arena.size() - final_set.size());
    return MonitorDFA("buchi", arena.size(), {1, 0}, [final_set, k](const MonitorState& q, Vertex v) -> MonitorState {
        if (final_set.contains(v)) return {1, 0};
        if (q[1] + 1 > k) return {};
        return {1, q[1] + 1};
    });
}

MonitorDFA cobuchi_monitor(const Arena& arena, const VertexSet& final_set) {
    if (final_set.universe() != arena.size()) throw GameError("final set over a different vertex universe");
    MonitorState start(1 + (arena.size() + 31) / 32, 0);
    start[0] = 1;
    return MonitorDFA("cobuchi", arena.size(), start, [final_set](const MonitorState& q, Vertex v) -> MonitorState {
        if (final_set.contains(v)) return q;
        const std::uint32_t bit = std::uint32_t{1} << (v % 32);
        if (q[1 + v / 32] & bit) return {};
        MonitorState next = q;
        next[1 + v / 32] |= bit;
        return next;
    });
}

MonitorDFA parity_monitor(const Arena& arena, const ParityCondition& parity) {
    if (parity.priority.size() != arena.size()) throw GameError("priority function does not cover the arena");
    std::map<unsigned, std::uint32_t> count;
    for (unsigned p : parity.priority) ++count[p];
    std::vector<unsigned> odd;
    std::vector<std::uint32_t> limit;
    for (auto [p, c] : count) {
        if (p % 2 == 1) {
            odd.push_back(p);
            limit.push_back(c);
        }
    }
    MonitorState start(1 + odd.size(), 0);
    start[0] = 1;
    auto priority = parity.priority;
    return MonitorDFA(
        "parity", arena.size(), start, [priority, odd, limit](const MonitorState& q, Vertex v) -> MonitorState {
            const unsigned p = priority[v];
            MonitorState next = q;
            if (p % 2 == 0) {
                for (std::size_t i = 0; i < odd.size(); ++i)
                    if (odd[i] > p) next[1 + i] = 0;
                return next;
            }
            const auto i = static_cast<std::size_t>(std::lower_bound(odd.begin(), odd.end(), p) - odd.begin());
            if (++next[1 + i] > limit[i]) return {};
            return next;
        });
}

std::uint64_t rr_bound(std::size_t vertices, std::size_t pairs) {
    if (pairs >= 40) throw GameError("too many request-response pairs");
    return static_cast<std::uint64_t>(vertices) * pairs * (std::uint64_t{1} << (pairs + 1));
}

MonitorDFA rr_monitor(const Arena& arena, const RequestResponseCondition& rr) {
    const std::uint64_t k = rr_bound(arena.size(), rr.pairs.size());
    if (k >= 0xffffffffULL) throw GameError("request-response bound too large");
    MonitorState start(1 + rr.pairs.size(), 0);
    start[0] = 1;
    auto pairs = rr.pairs;
    // Slot j holds 0 when no request of pair j is open, otherwise 1 + its age.
    return MonitorDFA("rr", arena.size(), start, [pairs, k](const MonitorState& q, Vertex v) -> MonitorState {
        MonitorState next = q;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            auto& slot = next[1 + j];
            if (slot != 0) ++slot;
            if (pairs[j].response.contains(v)) slot = 0;
            if (pairs[j].request.contains(v) && slot == 0) slot = 1;
            if (slot != 0 && slot - 1 > k) return {};
        }
        return next;
    });
}

MonitorDFA muller_monitor(const Arena& arena, const MullerCondition& muller, std::size_t max_loop_vertices) {
    if (arena.size() > 64) throw GameError("score tracking supports at most 64 vertices");
    auto family = f1_loops(muller, arena, max_loop_vertices);
    if (family.empty()) return MonitorDFA("muller", arena.size(), {1}, [](const MonitorState& q, Vertex) { return q; });
    auto tracker = ScoreTracker::from_sets(family);

    // Sheet layout: {2, last, (score, acc low word, acc high word) per tracked set}.
    auto encode = [](const ScoreSheet& s) {
        MonitorState q{2, s.last};
        for (const auto& e : s.entries) {
            q.push_back(e.score);
            q.push_back(static_cast<std::uint32_t>(e.acc));
            q.push_back(static_cast<std::uint32_t>(e.acc >> 32));
        }
        return q;
    };
    auto decode = [](const MonitorState& q) {
        ScoreSheet s;
        s.last = q[1];
        for (std::size_t i = 2; i + 3 <= q.size(); i += 3)
            s.entries.push_back({q[i], Mask{q[i + 1]} | (Mask{q[i + 2]} << 32)});
        return s;
    };

    return MonitorDFA("muller", arena.size(), {1},
                      [tracker, encode, decode](const MonitorState& q, Vertex v) -> MonitorState {
                          ScoreSheet next = q[0] == 1 ? tracker.sheet_init(v) : tracker.sheet_update(decode(q), v);
                          if (next.max_score() >= 3) return {};
                          return encode(next);
                      });
}

MonitorDFA monitor_for(const Arena& arena, const Condition& condition) {
    return std::visit(
        [&](const auto& c) -> MonitorDFA {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MullerCondition>) {
                return muller_monitor(arena, c);
            } else if constexpr (std::is_same_v<T, SafetyCondition>) {
                auto safe = c.safe;
                return MonitorDFA("safety", arena.size(), {1}, [safe](const MonitorState& q, Vertex v) -> MonitorState {
                    if (!safe.contains(v)) return {};
                    return q;
                });
            } else if constexpr (std::is_same_v<T, BuchiCondition>) {
                return buchi_monitor(arena, c.final_set);
            } else if constexpr (std::is_same_v<T, CoBuchiCondition>) {
                return cobuchi_monitor(arena, c.final_set);
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                return parity_monitor(arena, c);
            } else {
                return rr_monitor(arena, c);
            }
        },
        condition);
}

ProductGame product_game(const Arena& arena, const MonitorDFA& dfa, const ProductOptions& options) {
    if (dfa.alphabet() < arena.size()) throw GameError("monitor alphabet does not cover the arena");

    ProductGame prod;
    Arena& g = prod.game.arena;
    std::map<MonitorState, std::uint32_t> qindex;
    std::map<std::pair<Vertex, std::uint32_t>, Vertex> index;
    std::deque<Vertex> queue;
    std::vector<std::pair<Vertex, Vertex>> edges;

    auto check_limit = [&] {
        if (g.size() >= options.max_states)
            throw GameError("product exceeds the state limit of " + std::to_string(options.max_states) + " states");
    };
    auto sink = [&] {
        if (!prod.sink) {
            check_limit();
            prod.sink = g.add_vertex("sink", Player::one);
            prod.states.emplace_back();
            edges.emplace_back(*prod.sink, *prod.sink);
        }
        return *prod.sink;
    };
    auto intern = [&](Vertex v, const MonitorState& q) -> Vertex {
        if (MonitorDFA::is_reject(q)) return sink();
        auto [qit, qfresh] = qindex.try_emplace(q, static_cast<std::uint32_t>(prod.monitor_states.size()));
        if (qfresh) prod.monitor_states.push_back(q);
        auto [it, fresh] = index.try_emplace({v, qit->second}, 0);
        if (fresh) {
            check_limit();
            it->second = g.add_vertex("(" + arena.name(v) + ",q" + std::to_string(qit->second) + ")", arena.owner(v));
            prod.states.emplace_back(std::pair{v, qit->second});
            queue.push_back(it->second);
        }
        return it->second;
    };

    for (Vertex v = 0; v < arena.size(); ++v) prod.seed.push_back(intern(v, dfa.step(dfa.start(), v)));

    while (!queue.empty()) {
        const Vertex p = queue.front();
        queue.pop_front();
        const auto [v, qi] = *prod.states[p];
        const MonitorState q = prod.monitor_states[qi];
        for (Vertex w : arena.successors(v)) edges.emplace_back(p, intern(w, dfa.step(q, w)));
    }
    for (auto [a, b] : edges) g.add_edge(a, b);

    prod.game.safe = g.all_vertices();
    if (prod.sink) prod.game.safe.erase(*prod.sink);
    prod.game.safety_player = Player::zero;
    return prod;
}

ViaSafetyResult solve_via_safety(const Arena& arena, const Condition& condition, const MonitorDFA& dfa,
                                 const ProductOptions& options) {
    if (auto problems = validate(arena, condition); !problems.empty())
        throw GameError("invalid game: " + problems.front());

    ViaSafetyResult out;
    out.product = product_game(arena, dfa, options);
    out.solution = solve_safety(out.product.game);
    const ProductGame& prod = out.product;
    const std::size_t n = arena.size();

    out.w0 = VertexSet(n);
    for (Vertex v = 0; v < n; ++v)
        if (out.solution.w0.contains(prod.seed[v])) out.w0.insert(v);

    const auto reject = static_cast<Memory>(prod.monitor_states.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < prod.monitor_states.size(); ++i) names.push_back("q" + std::to_string(i));
    names.emplace_back("reject");

    std::map<MonitorState, Memory> memory_of;
    for (Memory i = 0; i < prod.monitor_states.size(); ++i) memory_of.emplace(prod.monitor_states[i], i);
    auto lookup = [&](const MonitorState& q) {
        auto it = memory_of.find(q);
        return it == memory_of.end() ? reject : it->second;
    };

    std::map<std::pair<Vertex, Memory>, Vertex> product_vertex;
    for (Vertex p = 0; p < prod.states.size(); ++p)
        if (prod.states[p]) product_vertex.emplace(*prod.states[p], p);

    MemoryStrategy strat(Player::zero, n, std::move(names), reject);
    for (Vertex v = 0; v < n; ++v) strat.set_init(v, lookup(dfa.step(dfa.start(), v)));
    for (Memory m = 0; m <= reject; ++m) {
        for (Vertex v = 0; v < n; ++v) {
            strat.set_update(m, v, m == reject ? reject : lookup(dfa.step(prod.monitor_states[m], v)));
            if (arena.owner(v) != Player::zero) continue;
            Vertex choice = arena.successors(v).front();
            if (auto it = product_vertex.find({v, m}); it != product_vertex.end()) {
                if (auto target = out.solution.safety_strategy[it->second]) choice = prod.states[*target]->first;
            }
            strat.set_moves(v, m, {choice});
        }
    }
    out.strategy = std::move(strat);
    return out;
}

bool monitor_never_rejects(const Arena& arena, const MonitorDFA& dfa, const MemoryStrategy& strat,
                           const VertexSet& from) {
    if (strat.vertex_count() != arena.size()) throw GameError("strategy and arena disagree on the vertex count");
    std::set<std::tuple<Vertex, Memory, MonitorState>> seen;
    std::deque<std::tuple<Vertex, Memory, MonitorState>> queue;
    auto push = [&](Vertex v, Memory m, MonitorState q) {
        if (MonitorDFA::is_reject(q)) return false;
        auto key = std::make_tuple(v, m, std::move(q));
        if (seen.insert(key).second) queue.push_back(std::move(key));
        return true;
    };
    for (Vertex v : from.elements())
        if (!push(v, strat.init(v), dfa.step(dfa.start(), v))) return false;
    while (!queue.empty()) {
        auto [v, m, q] = queue.front();
        queue.pop_front();
        std::span<const Vertex> moves = arena.owner(v) == strat.player() ? strat.allowed(v, m) : arena.successors(v);
        for (Vertex w : moves)
            if (!push(w, strat.update(m, w), dfa.step(q, w))) return false;
    }
    return true;
}

} // namespace mullersafe
