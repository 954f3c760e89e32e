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

#include "mullersafe/scoring.hpp"

#include <algorithm>

namespace mullersafe {

ScoreState score_word(Mask set, std::span<const Vertex> word) {
    if (word.empty()) throw GameError("score of the empty word is undefined");
    ScoreState s;
    for (Vertex v : word) s = score_step(set, s, v);
    return s;
}

unsigned maxscore(std::span<const Mask> family, std::span<const Vertex> word) {
    unsigned best = 0;
    for (Mask set : family) {
        ScoreState s;
        for (Vertex v : word) {
            s = score_step(set, s, v);
            best = std::max(best, s.score);
        }
    }
    return best;
}

void Lar::update(Vertex v) {
    auto it = std::find(order_.begin(), order_.end(), v);
    if (it != order_.end()) order_.erase(it);
    order_.push_back(v);
}

Mask Lar::suffix(std::size_t i) const {
    Mask m = 0;
    for (std::size_t k = 0; k < i && k < order_.size(); ++k) m |= Mask{1} << order_[order_.size() - 1 - k];
    return m;
}

Lar lar_of(std::span<const Vertex> word) {
    Lar l;
    for (Vertex v : word) l.update(v);
    return l;
}

unsigned ScoreSheet::max_score() const {
    unsigned m = 0;
    for (const auto& e : entries) m = std::max(m, e.score);
    return m;
}

std::size_t ScoreSheetHash::operator()(const ScoreSheet& s) const {
    std::size_t h = std::hash<Vertex>{}(s.last);
    for (const auto& e : s.entries) {
        h ^= std::hash<std::uint64_t>{}(e.acc * 4 + e.score) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

ScoreTracker::ScoreTracker(std::vector<Mask> family, unsigned cap) : family_(std::move(family)), cap_(cap) {
    if (cap_ == 0) throw GameError("score cap must be positive");
}

ScoreTracker ScoreTracker::from_sets(const std::vector<VertexSet>& family, unsigned cap) {
    std::vector<Mask> masks;
    masks.reserve(family.size());
    for (const auto& s : family) masks.push_back(s.to_mask());
    return ScoreTracker(std::move(masks), cap);
}

ScoreSheet ScoreTracker::sheet_init(Vertex v) const {
    if (v >= 64) throw GameError("score tracking supports at most 64 vertices");
    ScoreSheet s{v, {}, Lar(v)};
    s.entries.reserve(family_.size());
    for (Mask set : family_) s.entries.push_back(score_step(set, {}, v));
    return s;
}

ScoreSheet ScoreTracker::sheet_update(const ScoreSheet& sheet, Vertex v) const {
    if (is_terminal(sheet)) throw GameError("sheet update on a terminal sheet (score limit reached)");
    if (v >= 64) throw GameError("score tracking supports at most 64 vertices");
    ScoreSheet next{v, {}, sheet.lar.updated(v)};
    next.entries.reserve(family_.size());
    for (std::size_t i = 0; i < family_.size(); ++i)
        next.entries.push_back(score_step(family_[i], sheet.entries[i], v));
    return next;
}

ScoreSheet ScoreTracker::sheet_of(std::span<const Vertex> word) const {
    if (word.empty()) throw GameError("sheet of the empty word is undefined");
    ScoreSheet s = sheet_init(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) s = sheet_update(s, word[i]);
    return s;
}

bool ScoreTracker::sheet_le(const ScoreSheet& a, const ScoreSheet& b) const {
    if (a.last != b.last) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (x.score < y.score) continue;
        if (x.score == y.score && mask_subset(x.acc, y.acc)) continue;
        return false;
    }
    return true;
}

} // namespace mullersafe
