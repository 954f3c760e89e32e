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

#include "mullersafe/arena.hpp"

#include <algorithm>
#include <deque>

namespace mullersafe {

Vertex Arena::add_vertex(std::string name, Player owner) {
    if (by_name_.contains(name)) throw GameError("duplicate vertex '" + name + "'");
    const auto v = static_cast<Vertex>(owners_.size());
    if (name.size() != 1) short_names_ = false;
    by_name_.emplace(name, v);
    names_.push_back(std::move(name));
    owners_.push_back(owner);
    succ_.emplace_back();
    pred_.emplace_back();
    return v;
}

void Arena::add_edge(Vertex from, Vertex to) {
    if (from >= size() || to >= size()) throw GameError("edge endpoint out of range");
    auto& out = succ_[from];
    auto it = std::lower_bound(out.begin(), out.end(), to);
    if (it != out.end() && *it == to) return;
    out.insert(it, to);
    auto& in = pred_[to];
    in.insert(std::lower_bound(in.begin(), in.end(), from), from);
    ++edge_count_;
}

std::optional<Vertex> Arena::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

bool Arena::has_edge(Vertex from, Vertex to) const {
    if (from >= size()) return false;
    const auto& out = succ_[from];
    return std::binary_search(out.begin(), out.end(), to);
}

VertexSet Arena::vertices_of(Player p) const {
    VertexSet s(size());
    for (Vertex v = 0; v < size(); ++v)
        if (owners_[v] == p) s.insert(v);
    return s;
}

std::string Arena::format(const VertexSet& s) const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.elements()) {
        if (!first) out += ',';
        out += v < size() ? names_[v] : std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::string Arena::format_word(std::span<const Vertex> w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !short_names_) out += ',';
        out += names_.at(w[i]);
    }
    return out;
}

void MullerCondition::normalize() {
    std::sort(f0.begin(), f0.end());
    f0.erase(std::unique(f0.begin(), f0.end()), f0.end());
}

bool MullerCondition::player0_wins(const VertexSet& infinity_set) const {
    return std::find(f0.begin(), f0.end(), infinity_set) != f0.end();
}

std::string condition_kind(const Condition& c) {
    static constexpr const char* names[] = {"muller", "safety", "buchi", "cobuchi", "parity", "rr"};
    return names[c.index()];
}

namespace {

void check_set(const Arena& arena, const VertexSet& s, const std::string& what, std::vector<std::string>& out) {
    if (s.universe() != arena.size()) out.push_back(what + " refers to vertices outside the arena");
}

} // namespace

std::vector<std::string> validate(const Arena& arena, const Condition& condition) {
    std::vector<std::string> out;
    if (arena.size() == 0) out.emplace_back("arena has no vertices");
    for (Vertex v = 0; v < arena.size(); ++v)
        if (arena.successors(v).empty()) out.push_back("vertex " + arena.name(v) + " has no outgoing edge");

    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MullerCondition>) {
                for (const auto& s : c.f0) {
                    if (s.universe() != arena.size()) {
                        out.emplace_back("f0 set refers to vertices outside the arena");
                        continue;
                    }
                    if (s.empty())
                        out.emplace_back("f0 contains the empty set");
                    else if (!is_loop(arena, s))
                        out.push_back("f0 set " + arena.format(s) + " is not a loop");
                }
            } else if constexpr (std::is_same_v<T, SafetyCondition>) {
                check_set(arena, c.safe, "safe set", out);
            } else if constexpr (std::is_same_v<T, BuchiCondition> || std::is_same_v<T, CoBuchiCondition>) {
                check_set(arena, c.final_set, "final set", out);
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                if (c.priority.size() != arena.size())
                    out.push_back("priority function covers " + std::to_string(c.priority.size()) + " of " +
                                  std::to_string(arena.size()) + " vertices");
            } else {
                for (std::size_t j = 0; j < c.pairs.size(); ++j) {
                    check_set(arena, c.pairs[j].request, "request set of pair " + std::to_string(j), out);
                    check_set(arena, c.pairs[j].response, "response set of pair " + std::to_string(j), out);
                }
            }
        },
        condition);
    return out;
}

VertexSet occ(std::size_t universe, std::span<const Vertex> word) {
    VertexSet s(universe);
    for (Vertex v : word) s.insert(v);
    return s;
}

VertexSet infi(std::size_t universe, const Lasso& lasso) { return occ(universe, lasso.cycle); }

bool is_path(const Arena& arena, std::span<const Vertex> word) {
    for (Vertex v : word)
        if (v >= arena.size()) return false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (!arena.has_edge(word[i], word[i + 1])) return false;
    return true;
}

bool is_valid_lasso(const Arena& arena, const Lasso& lasso) {
    if (lasso.cycle.empty()) return false;
    std::vector<Vertex> unfolded = lasso.stem;
    unfolded.insert(unfolded.end(), lasso.cycle.begin(), lasso.cycle.end());
    unfolded.push_back(lasso.cycle.front());
    return is_path(arena, unfolded);
}

namespace {

Player to_player(bool player0_wins) { return player0_wins ? Player::zero : Player::one; }

bool request_response_won(const RequestResponseCondition& rr, const Lasso& lasso, const VertexSet& inf) {
    std::vector<Vertex> unfolded = lasso.stem;
    for (int rep = 0; rep < 2; ++rep) unfolded.insert(unfolded.end(), lasso.cycle.begin(), lasso.cycle.end());

    for (const auto& pair : rr.pairs) {
        if (inf.intersects(pair.request) && !inf.intersects(pair.response)) return false;
        if (inf.intersects(pair.response)) continue;
        // Responses occur only finitely often: every request must already be
        // answered on the unfolding.
        bool pending = false;
        for (Vertex v : unfolded) {
            if (pair.response.contains(v)) pending = false;
            if (pair.request.contains(v)) pending = true;
        }
        if (pending) return false;
    }
    return true;
}

} // namespace

Player winner(const Arena& arena, const Condition& condition, const Lasso& lasso) {
    if (!is_valid_lasso(arena, lasso)) throw GameError("lasso is not a play of the arena");
    const VertexSet inf = infi(arena.size(), lasso);
    return std::visit(
        [&](const auto& c) -> Player {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MullerCondition>) {
                return to_player(c.player0_wins(inf));
            } else if constexpr (std::is_same_v<T, SafetyCondition>) {
                VertexSet seen = occ(arena.size(), lasso.stem) | inf;
                return to_player(seen.is_subset_of(c.safe));
            } else if constexpr (std::is_same_v<T, BuchiCondition>) {
                return to_player(inf.intersects(c.final_set));
            } else if constexpr (std::is_same_v<T, CoBuchiCondition>) {
                return to_player(inf.is_subset_of(c.final_set));
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                unsigned least = ~0u;
                for (Vertex v : inf.elements()) least = std::min(least, c.priority.at(v));
                return to_player(least % 2 == 0);
            } else {
                return to_player(request_response_won(c, lasso, inf));
            }
        },
        condition);
}

bool is_loop(const Arena& arena, const VertexSet& s) {
    if (s.empty()) return false;
    const auto members = s.elements();
    for (Vertex src : members) {
        // vertices reachable from src by a non-empty path inside s
        VertexSet reached(arena.size());
        std::deque<Vertex> queue{src};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : arena.successors(u)) {
                if (!s.contains(w) || reached.contains(w)) continue;
                reached.insert(w);
                queue.push_back(w);
            }
        }
        if (!s.is_subset_of(reached)) return false;
    }
    return true;
}

std::vector<VertexSet> enumerate_loops(const Arena& arena, std::size_t max_vertices) {
    const std::size_t n = arena.size();
    if (n > max_vertices || n > 63)
        throw GameError("loop enumeration limited to " + std::to_string(max_vertices) + " vertices, arena has " +
                        std::to_string(n));
    std::vector<VertexSet> loops;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = VertexSet::from_mask(n, mask);
        if (is_loop(arena, s)) loops.push_back(std::move(s));
    }
    std::sort(loops.begin(), loops.end());
    return loops;
}

std::vector<VertexSet> f1_loops(const MullerCondition& muller, const Arena& arena, std::size_t max_vertices) {
    return loops_of(muller, arena, Player::one, max_vertices);
}

std::vector<VertexSet> loops_of(const MullerCondition& muller, const Arena& arena, Player p, std::size_t max_vertices) {
    std::vector<VertexSet> out;
    for (auto& loop : enumerate_loops(arena, max_vertices))
        if (muller.player0_wins(loop) == (p == Player::zero)) out.push_back(std::move(loop));
    return out;
}

} // namespace mullersafe
