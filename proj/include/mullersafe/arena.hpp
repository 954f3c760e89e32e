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

#include "mullersafe/core.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace mullersafe {

/**
 * A finite directed graph whose vertices are partitioned between Player 0 and
 * Player 1. Vertices carry an external name and are addressed by dense index.
 * Successor and predecessor lists are kept sorted and free of duplicates.
 */
class Arena {
public:
    Arena() = default;

    Vertex add_vertex(std::string name, Player owner);
    /// Adds (from, to); adding an existing edge is a no-op.
    void add_edge(Vertex from, Vertex to);

    std::size_t size() const { return owners_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    Player owner(Vertex v) const { return owners_.at(v); }
    const std::string& name(Vertex v) const { return names_.at(v); }
    std::optional<Vertex> find(std::string_view name) const;

    std::span<const Vertex> successors(Vertex v) const { return succ_.at(v); }
    std::span<const Vertex> predecessors(Vertex v) const { return pred_.at(v); }
    bool has_edge(Vertex from, Vertex to) const;

    VertexSet vertices_of(Player p) const;
    VertexSet all_vertices() const { return VertexSet::full(size()); }
    VertexSet empty_set() const { return VertexSet(size()); }

    /// Renders a vertex set as "{a,b,c}" using vertex names, in index order.
    std::string format(const VertexSet& s) const;
    /// Renders a word by concatenating names, or comma-separating them when
    /// some name is longer than one character.
    std::string format_word(std::span<const Vertex> w) const;

private:
    std::vector<std::string> names_;
    std::vector<Player> owners_;
    std::vector<std::vector<Vertex>> succ_;
    std::vector<std::vector<Vertex>> pred_;
    std::unordered_map<std::string, Vertex> by_name_;
    std::size_t edge_count_ = 0;
    bool short_names_ = true;
};

/// 𝓕₀ of a Muller game. Loops not listed belong to Player 1.
struct MullerCondition {
    std::vector<VertexSet> f0;

    /// Sorts and deduplicates f0 into canonical order.
    void normalize();
    bool player0_wins(const VertexSet& infinity_set) const;
};

struct SafetyCondition {
    VertexSet safe;
};

struct BuchiCondition {
    VertexSet final_set;
};

/// Player 0 wins iff the play eventually stays inside `final_set`.
struct CoBuchiCondition {
    VertexSet final_set;
};

struct ParityCondition {
    std::vector<unsigned> priority; // indexed by vertex
};

struct RequestResponsePair {
    VertexSet request;
    VertexSet response;
};

struct RequestResponseCondition {
    std::vector<RequestResponsePair> pairs;
};

using Condition = std::variant<MullerCondition, SafetyCondition, BuchiCondition, CoBuchiCondition, ParityCondition,
                               RequestResponseCondition>;

/// Short lowercase name of the condition kind ("muller", "parity", ...).
std::string condition_kind(const Condition& c);

/// The ultimately periodic play stem·cycle^ω.
struct Lasso {
    std::vector<Vertex> stem;
    std::vector<Vertex> cycle;
};

/// Returns one message per violated arena or condition invariant; empty iff valid.
std::vector<std::string> validate(const Arena& arena, const Condition& condition);

VertexSet occ(std::size_t universe, std::span<const Vertex> word);
VertexSet infi(std::size_t universe, const Lasso& lasso);

bool is_path(const Arena& arena, std::span<const Vertex> word);
bool is_valid_lasso(const Arena& arena, const Lasso& lasso);

/// Winner of the play represented by `lasso`. Throws GameError if the lasso is not a play.
Player winner(const Arena& arena, const Condition& condition, const Lasso& lasso);

/// True iff `s` is non-empty and strongly connected by non-empty paths inside `s`.
/// A singleton {v} is a loop iff (v, v) is an edge.
bool is_loop(const Arena& arena, const VertexSet& s);

inline constexpr std::size_t kDefaultLoopGuard = 16;

/// All loops in canonical order. Exponential; throws GameError above `max_vertices`.
std::vector<VertexSet> enumerate_loops(const Arena& arena, std::size_t max_vertices = kDefaultLoopGuard);

/// Loops not in f0, in canonical order.
std::vector<VertexSet> f1_loops(const MullerCondition& muller, const Arena& arena,
                                std::size_t max_vertices = kDefaultLoopGuard);

/// The family of loops won by `p`.
std::vector<VertexSet> loops_of(const MullerCondition& muller, const Arena& arena, Player p,
                                std::size_t max_vertices = kDefaultLoopGuard);

} // namespace mullersafe
