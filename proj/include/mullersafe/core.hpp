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

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mullersafe {

using Vertex = std::uint32_t;

enum class Player : std::uint8_t { zero = 0, one = 1 };

constexpr Player opponent(Player p) { return p == Player::zero ? Player::one : Player::zero; }
constexpr int index_of(Player p) { return static_cast<int>(p); }
constexpr Player player_from_int(int i) { return i == 0 ? Player::zero : Player::one; }

/// Thrown for malformed input, violated preconditions and exceeded size guards.
class GameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Set of vertices over a fixed universe {0, ..., universe-1}, stored as a bitset.
///
/// Ordering compares the ascending element sequences lexicographically, so
/// {0} < {0,1} < {0,1,2} < {1} < {1,2} < {2}. This is the canonical order used
/// for families of loops.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> elems) : VertexSet(universe) {
        for (Vertex v : elems) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (Vertex v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    /// Builds a set from a bitmask (bit i set iff vertex i is a member).
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        VertexSet s(universe);
        for (Vertex v = 0; v < universe && v < 64; ++v)
            if ((mask >> v) & 1u) s.insert(v);
        return s;
    }

    std::size_t universe() const { return universe_; }

    void insert(Vertex v) {
        check(v);
        words_[v / 64] |= bit(v);
    }
    void erase(Vertex v) {
        check(v);
        words_[v / 64] &= ~bit(v);
    }
    bool contains(Vertex v) const { return v < universe_ && (words_[v / 64] & bit(v)) != 0; }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
            if (words_[i] & ~o) return false;
        }
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const { return full(universe_) - *this; }

    /// Members in ascending order.
    std::vector<Vertex> elements() const {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Bitmask of the members; only valid for universes of at most 64 vertices.
    std::uint64_t to_mask() const {
        if (universe_ > 64) throw GameError("vertex set universe exceeds 64 vertices");
        return words_.empty() ? 0 : words_[0];
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        auto ea = a.elements();
        auto eb = b.elements();
        if (auto c = std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end()); c != 0)
            return c;
        return a.universe_ <=> b.universe_;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v % 64); }
    void check(Vertex v) const {
        if (v >= universe_)
            throw GameError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }
    void same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_) throw GameError("vertex sets over different universes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace mullersafe
