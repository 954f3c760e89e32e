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
#include "mullersafe/strategy.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mullersafe {

/// Encoded monitor state. The empty vector is the absorbing reject state.
using MonitorState = std::vector<std::uint32_t>;

/**
 * Deterministic finite automaton over the vertex alphabet recognizing a
 * prefix-closed language. States are produced on the fly by a transition
 * function; every state other than the reject state is accepting.
 */
class MonitorDFA {
public:
    using StepFn = std::function<MonitorState(const MonitorState&, Vertex)>;

    MonitorDFA(std::string kind, std::size_t alphabet, MonitorState start, StepFn step);

    /// One accepting state looping on every letter.
    static MonitorDFA universal(std::size_t alphabet);

    const std::string& kind() const { return kind_; }
    std::size_t alphabet() const { return alphabet_; }
    const MonitorState& start() const { return start_; }

    /// Throws GameError for letters outside the alphabet.
    MonitorState step(const MonitorState& q, Vertex v) const;
    static bool is_reject(const MonitorState& q) { return q.empty(); }
    static bool accepting(const MonitorState& q) { return !q.empty(); }

private:
    std::string kind_;
    std::size_t alphabet_;
    MonitorState start_;
    StepFn step_;
};

MonitorState run_dfa(const MonitorDFA& dfa, std::span<const Vertex> word);

/// Accepts words that never see more than |V ∖ F| consecutive vertices outside F.
MonitorDFA buchi_monitor(const Arena& arena, const VertexSet& final_set);
/// Accepts words in which every vertex outside F occurs at most once.
MonitorDFA cobuchi_monitor(const Arena& arena, const VertexSet& final_set);
/// Accepts words that never see n_c + 1 vertices of odd priority c without a
/// smaller even priority in between (n_c = number of vertices of priority c).
MonitorDFA parity_monitor(const Arena& arena, const ParityCondition& parity);
/// Accepts words in which every request is answered within |V|·r·2^(r+1) steps.
MonitorDFA rr_monitor(const Arena& arena, const RequestResponseCondition& rr);
/// Accepts words in which no loop of Player 1 reaches a score of 3.
MonitorDFA muller_monitor(const Arena& arena, const MullerCondition& muller,
                          std::size_t max_loop_vertices = kDefaultLoopGuard);

/// Waiting-time bound of the request-response monitor.
std::uint64_t rr_bound(std::size_t vertices, std::size_t pairs);

/// The monitor matching a condition's kind. Safety conditions get a monitor
/// rejecting on the first unsafe vertex.
MonitorDFA monitor_for(const Arena& arena, const Condition& condition);

/**
 * Safety game on the reachable part of arena × DFA, seeded with (v, δ(q₀, v))
 * for every vertex v, explored breadth-first. All states whose DFA component
 * is the reject state are merged into one sink vertex with a self-loop.
 */
struct ProductGame {
    SafetyGame game;
    /// (original vertex, monitor state index) per product vertex; the sink has neither.
    std::vector<std::optional<std::pair<Vertex, std::uint32_t>>> states;
    /// Distinct non-reject monitor states reached, in discovery order.
    std::vector<MonitorState> monitor_states;
    /// Original vertex -> product vertex of (v, δ(q₀, v)).
    std::vector<Vertex> seed;
    std::optional<Vertex> sink;
};

struct ProductOptions {
    std::size_t max_states = 2'000'000;
};

ProductGame product_game(const Arena& arena, const MonitorDFA& dfa, const ProductOptions& options = {});

struct ViaSafetyResult {
    VertexSet w0;
    /// Player 0 strategy using the reached monitor states (plus a trailing reject state) as memory.
    MemoryStrategy strategy;
    ProductGame product;
    SafetySolution solution;
};

/// Solves (arena, condition) through the safety game arena × dfa. The caller
/// guarantees that `dfa` recognizes a safety reduction language for the condition.
ViaSafetyResult solve_via_safety(const Arena& arena, const Condition& condition, const MonitorDFA& dfa,
                                 const ProductOptions& options = {});

/// True iff no play from `from` consistent with `strat` drives `dfa` into its reject state.
bool monitor_never_rejects(const Arena& arena, const MonitorDFA& dfa, const MemoryStrategy& strat,
                           const VertexSet& from);

} // namespace mullersafe
