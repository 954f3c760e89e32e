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

#include <span>
#include <vector>

namespace mullersafe {

/// Vertex set over at most 64 vertices, bit i standing for vertex i.
using Mask = std::uint64_t;

constexpr Mask mask_of(std::initializer_list<Vertex> vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= Mask{1} << v;
    return m;
}
constexpr bool mask_contains(Mask m, Vertex v) { return v < 64 && ((m >> v) & 1u) != 0; }
constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Score and accumulator of one vertex set F after some play prefix.
/// The accumulator is always a proper subset of F.
struct ScoreState {
    unsigned score = 0;
    Mask acc = 0;

    friend bool operator==(const ScoreState&, const ScoreState&) = default;
};

/**
 * Extends the score of F by one vertex:
 *   v ∉ F                 -> (0, ∅)
 *   v ∈ F, acc = F ∖ {v}  -> (score + 1, ∅)
 *   v ∈ F, otherwise      -> (score, acc ∪ {v})
 * The score of a one-letter word is score_step(F, {}, v).
 */
constexpr ScoreState score_step(Mask set, ScoreState state, Vertex v) {
    if (!mask_contains(set, v)) return {};
    const Mask bit = Mask{1} << v;
    if (state.acc == (set & ~bit)) return {state.score + 1, 0};
    return {state.score, state.acc | bit};
}

/// (score_F(w), acc_F(w)). Throws GameError on an empty word.
ScoreState score_word(Mask set, std::span<const Vertex> word);

/// Maximum score of any set of `family` over all non-empty prefixes of `word`.
unsigned maxscore(std::span<const Mask> family, std::span<const Vertex> word);

/// Latest appearance record: distinct vertices ordered by their latest occurrence,
/// most recent last.
class Lar {
public:
    Lar() = default;
    explicit Lar(Vertex v) : order_{v} {}

    /// Moves v to the end, appending it if absent.
    void update(Vertex v);
    Lar updated(Vertex v) const {
        Lar l = *this;
        l.update(v);
        return l;
    }

    std::span<const Vertex> order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    /// Set of the i most recent vertices (the suffix of length i).
    Mask suffix(std::size_t i) const;

    friend bool operator==(const Lar&, const Lar&) = default;

private:
    std::vector<Vertex> order_;
};

Lar lar_of(std::span<const Vertex> word);

/**
 * Canonical representative of an equivalence class of play prefixes under the
 * score equivalence for a tracked family: the last vertex plus one capped
 * (score, accumulator) entry per tracked set. The LAR is carried along for
 * diagnostics and is not part of equality or hashing.
 */
struct ScoreSheet {
    Vertex last = 0;
    std::vector<ScoreState> entries;
    Lar lar;

    unsigned max_score() const;

    friend bool operator==(const ScoreSheet& a, const ScoreSheet& b) {
        return a.last == b.last && a.entries == b.entries;
    }
};

struct ScoreSheetHash {
    std::size_t operator()(const ScoreSheet& s) const;
};

/// Tracks the scores of a fixed, canonically ordered family of vertex sets.
class ScoreTracker {
public:
    /// Scores are capped at `cap`; a sheet holding a score equal to `cap` is terminal.
    explicit ScoreTracker(std::vector<Mask> family, unsigned cap = 3);
    static ScoreTracker from_sets(const std::vector<VertexSet>& family, unsigned cap = 3);

    std::span<const Mask> family() const { return family_; }
    unsigned cap() const { return cap_; }

    ScoreSheet sheet_init(Vertex v) const;
    /// Class of wv given the class of w. Throws GameError if `sheet` is terminal.
    ScoreSheet sheet_update(const ScoreSheet& sheet, Vertex v) const;
    ScoreSheet sheet_of(std::span<const Vertex> word) const;

    bool is_terminal(const ScoreSheet& sheet) const { return sheet.max_score() >= cap_; }

    /// The score preorder: equal last vertex and, per set, a strictly smaller
    /// score or an equal score with a contained accumulator.
    bool sheet_le(const ScoreSheet& a, const ScoreSheet& b) const;

private:
    std::vector<Mask> family_;
    unsigned cap_;
};

} // namespace mullersafe
