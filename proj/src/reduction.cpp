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

#include "mullersafe/reduction.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace mullersafe {

Vertex SafetyReduction::last(Vertex q) const { return sheet(q).last; }

const ScoreSheet& SafetyReduction::sheet(Vertex q) const {
    const auto& s = sheets.at(q);
    if (!s) throw GameError("the sink class has no score sheet");
    return *s;
}

std::optional<Vertex> SafetyReduction::successor(Vertex q, Vertex v) const {
    const auto& row = transitions.at(q);
    auto it = std::lower_bound(row.begin(), row.end(), std::pair<Vertex, Vertex>{v, 0});
    if (it == row.end() || it->first != v) return std::nullopt;
    return it->second;
}

SafetyReduction build_safety_game(const Arena& arena, const MullerCondition& muller, const ReductionOptions& options) {
    if (options.threshold != 2 && options.threshold != 3)
        throw GameError("reduction threshold must be 2 or 3, got " + std::to_string(options.threshold));
    if (arena.size() > 64) throw GameError("score tracking supports at most 64 vertices");

    SafetyReduction red;
    red.tracked_player = options.tracked_player;
    red.threshold = options.threshold;
    red.tracked_family = loops_of(muller, arena, options.tracked_player, options.max_loop_vertices);
    red.tracker = ScoreTracker::from_sets(red.tracked_family);
    red.game.safety_player = opponent(options.tracked_player);

    Arena& quotient = red.game.arena;
    std::unordered_map<ScoreSheet, Vertex, ScoreSheetHash> index;
    std::unordered_set<ScoreSheet, ScoreSheetHash> unsafe;
    std::deque<Vertex> queue;

    auto check_limit = [&] {
        if (quotient.size() >= options.max_states)
            throw GameError("quotient exceeds the state limit of " + std::to_string(options.max_states) + " classes");
    };
    auto add_class = [&](ScoreSheet sheet, std::vector<Vertex> word) {
        check_limit();
        const Vertex q = quotient.add_vertex("[" + arena.format_word(word) + "]", arena.owner(sheet.last));
        index.emplace(sheet, q);
        red.sheets.emplace_back(std::move(sheet));
        red.representative.push_back(std::move(word));
        red.transitions.emplace_back();
        queue.push_back(q);
        return q;
    };
    auto sink = [&] {
        if (!red.sink) {
            check_limit();
            red.sink = quotient.add_vertex("sink", options.tracked_player);
            red.sheets.emplace_back();
            red.representative.emplace_back();
            red.transitions.emplace_back();
            quotient.add_edge(*red.sink, *red.sink);
        }
        return *red.sink;
    };

    for (Vertex v = 0; v < arena.size(); ++v) red.embed.push_back(add_class(red.tracker.sheet_init(v), {v}));

    while (!queue.empty()) {
        const Vertex q = queue.front();
        queue.pop_front();
        const ScoreSheet current = *red.sheets[q];
        for (Vertex v : arena.successors(current.last)) {
            ScoreSheet next = red.tracker.sheet_update(current, v);
            Vertex target;
            if (next.max_score() >= options.threshold) {
                unsafe.insert(std::move(next));
                target = sink();
            } else if (auto it = index.find(next); it != index.end()) {
                target = it->second;
            } else {
                auto word = red.representative[q];
                word.push_back(v);
                target = add_class(std::move(next), std::move(word));
            }
            quotient.add_edge(q, target);
            red.transitions[q].emplace_back(v, target);
        }
    }

    red.unsafe_classes = unsafe.size();
    red.game.safe = quotient.all_vertices();
    if (red.sink) red.game.safe.erase(*red.sink);
    return red;
}

Vertex class_of(const SafetyReduction& red, std::span<const Vertex> word) {
    if (word.empty()) throw GameError("class of the empty word is undefined");
    if (word.front() >= red.embed.size()) throw GameError("word uses a vertex outside the arena");
    Vertex q = red.embed[word.front()];
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (red.is_sink(q)) throw GameError("prefix of length " + std::to_string(i) + " already reached the threshold");
        auto next = red.successor(q, word[i]);
        if (!next) throw GameError("word is not a play prefix at position " + std::to_string(i));
        q = *next;
    }
    return q;
}

namespace {

using wide = unsigned __int128;
constexpr wide kSaturate = std::numeric_limits<std::uint64_t>::max();

wide sat_mul(wide a, wide b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturate / b) return kSaturate;
    return std::min(a * b, kSaturate);
}

} // namespace

std::uint64_t quotient_size_bound(std::size_t n) {
    wide total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        wide binom = 1;
        for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        wide fact = 1;
        for (std::size_t i = 2; i <= k; ++i) fact = sat_mul(fact, i);
        wide term = sat_mul(sat_mul(sat_mul(binom, fact), wide{1} << std::min<std::size_t>(k, 63)), fact);
        total = std::min(total + term, kSaturate);
    }
    return static_cast<std::uint64_t>(std::min(total + 1, kSaturate));
}

std::uint64_t factorial_cubed(std::size_t n) {
    wide fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact = sat_mul(fact, i);
    return static_cast<std::uint64_t>(sat_mul(sat_mul(fact, fact), fact));
}

} // namespace mullersafe
