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

#include "mullersafe/game_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mullersafe {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        std::size_t end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) line.tokens.push_back(std::move(cur));
            cur.clear();
        };
        for (char c : raw) {
            if (c == ' ' || c == '\t' || c == '\r') {
                flush();
            } else if (c == '{' || c == '}') {
                flush();
                line.tokens.emplace_back(1, c);
            } else {
                cur.push_back(c);
            }
        }
        flush();
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::optional<unsigned long> parse_nat(const std::string& s) {
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// Reads "{ a b ... }" starting at tokens[pos]; advances pos past the closing brace.
std::vector<std::string> read_braced(const Line& line, std::size_t& pos) {
    if (pos >= line.tokens.size() || line.tokens[pos] != "{") fail(line.number, "expected '{'");
    ++pos;
    std::vector<std::string> out;
    while (pos < line.tokens.size() && line.tokens[pos] != "}") {
        if (line.tokens[pos] == "{") fail(line.number, "nested '{'");
        out.push_back(line.tokens[pos++]);
    }
    if (pos >= line.tokens.size()) fail(line.number, "missing '}'");
    ++pos;
    return out;
}

void expect_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n)
        fail(line.number, "'" + line.tokens[0] + "' expects " + std::to_string(n - 1) + " argument(s)");
}

Vertex lookup(const Arena& arena, const Line& line, const std::string& id) {
    auto v = arena.find(id);
    if (!v) fail(line.number, "unknown vertex '" + id + "'");
    return *v;
}

std::string join_names(const Arena& arena, const VertexSet& s) {
    std::string out;
    for (Vertex v : s.elements()) out += " " + arena.name(v);
    return out;
}

} // namespace

Game parse_game(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    Arena arena;

    // Condition directives are collected first and resolved once all vertices are known.
    std::optional<std::string> kind;
    std::size_t kind_line = 0;
    std::vector<const Line*> body;

    for (const Line& line : lines) {
        const std::string& d = line.tokens[0];
        if (d == "vertex") {
            expect_arity(line, 3);
            const std::string& id = line.tokens[1];
            if (arena.find(id)) fail(line.number, "duplicate vertex '" + id + "'");
            if (line.tokens[2] != "0" && line.tokens[2] != "1")
                fail(line.number, "vertex owner must be 0 or 1, got '" + line.tokens[2] + "'");
            arena.add_vertex(id, line.tokens[2] == "0" ? Player::zero : Player::one);
        } else if (d == "edge") {
            expect_arity(line, 3);
            arena.add_edge(lookup(arena, line, line.tokens[1]), lookup(arena, line, line.tokens[2]));
        } else if (d == "condition") {
            expect_arity(line, 2);
            if (kind) fail(line.number, "second condition (first on line " + std::to_string(kind_line) + ")");
            const std::string& k = line.tokens[1];
            if (k != "muller" && k != "parity" && k != "buchi" && k != "cobuchi" && k != "rr" && k != "safety")
                fail(line.number, "unknown condition '" + k + "'");
            kind = k;
            kind_line = line.number;
        } else if (d == "f0" || d == "priority" || d == "final" || d == "pair" || d == "safe") {
            if (!kind) fail(line.number, "'" + d + "' before any condition line");
            body.push_back(&line);
        } else {
            fail(line.number, "unknown directive '" + d + "'");
        }
    }
    if (!kind) throw ParseError("missing condition");

    auto wrong_kind = [&](const Line& line) {
        fail(line.number, "'" + line.tokens[0] + "' does not belong to condition " + *kind);
    };
    auto ids_to_set = [&](const Line& line, const std::vector<std::string>& ids) {
        VertexSet s = arena.empty_set();
        for (const auto& id : ids) s.insert(lookup(arena, line, id));
        return s;
    };

    Condition condition;
    if (*kind == "muller") {
        MullerCondition m;
        for (const Line* line : body) {
            if (line->tokens[0] != "f0") wrong_kind(*line);
            std::size_t pos = 1;
            VertexSet s = ids_to_set(*line, read_braced(*line, pos));
            if (pos != line->tokens.size()) fail(line->number, "trailing tokens after '}'");
            m.f0.push_back(std::move(s));
        }
        m.normalize();
        condition = std::move(m);
    } else if (*kind == "parity") {
        std::vector<std::optional<unsigned>> prio(arena.size());
        for (const Line* line : body) {
            if (line->tokens[0] != "priority") wrong_kind(*line);
            expect_arity(*line, 3);
            Vertex v = lookup(arena, *line, line->tokens[1]);
            auto p = parse_nat(line->tokens[2]);
            if (!p || *p > 1'000'000) fail(line->number, "bad priority '" + line->tokens[2] + "'");
            if (prio[v]) fail(line->number, "second priority for vertex '" + line->tokens[1] + "'");
            prio[v] = static_cast<unsigned>(*p);
        }
        ParityCondition p;
        for (Vertex v = 0; v < arena.size(); ++v) {
            if (!prio[v]) fail(kind_line, "vertex '" + arena.name(v) + "' has no priority");
            p.priority.push_back(*prio[v]);
        }
        condition = std::move(p);
    } else if (*kind == "buchi" || *kind == "cobuchi" || *kind == "safety") {
        const std::string directive = *kind == "safety" ? "safe" : "final";
        VertexSet s = arena.empty_set();
        for (const Line* line : body) {
            if (line->tokens[0] != directive) wrong_kind(*line);
            expect_arity(*line, 2);
            s.insert(lookup(arena, *line, line->tokens[1]));
        }
        if (*kind == "buchi")
            condition = BuchiCondition{std::move(s)};
        else if (*kind == "cobuchi")
            condition = CoBuchiCondition{std::move(s)};
        else
            condition = SafetyCondition{std::move(s)};
    } else {
        RequestResponseCondition rr;
        for (const Line* line : body) {
            if (line->tokens[0] != "pair") wrong_kind(*line);
            std::size_t pos = 1;
            VertexSet request = ids_to_set(*line, read_braced(*line, pos));
            VertexSet response = ids_to_set(*line, read_braced(*line, pos));
            if (pos != line->tokens.size()) fail(line->number, "trailing tokens after '}'");
            rr.pairs.push_back({std::move(request), std::move(response)});
        }
        condition = std::move(rr);
    }

    auto violations = validate(arena, condition);
    if (!violations.empty()) {
        std::string msg = "invalid game:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw ParseError(msg);
    }
    return {std::move(arena), std::move(condition)};
}

std::string serialize_game(const Arena& arena, const Condition& condition) {
    std::ostringstream out;
    for (Vertex v = 0; v < arena.size(); ++v)
        out << "vertex " << arena.name(v) << ' ' << index_of(arena.owner(v)) << '\n';
    for (Vertex v = 0; v < arena.size(); ++v)
        for (Vertex w : arena.successors(v)) out << "edge " << arena.name(v) << ' ' << arena.name(w) << '\n';
    out << "condition " << condition_kind(condition) << '\n';
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MullerCondition>) {
                MullerCondition m = c;
                m.normalize();
                for (const auto& s : m.f0) out << "f0 {" << join_names(arena, s) << " }\n";
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                for (Vertex v = 0; v < arena.size(); ++v)
                    out << "priority " << arena.name(v) << ' ' << c.priority.at(v) << '\n';
            } else if constexpr (std::is_same_v<T, SafetyCondition>) {
                for (Vertex v : c.safe.elements()) out << "safe " << arena.name(v) << '\n';
            } else if constexpr (std::is_same_v<T, RequestResponseCondition>) {
                for (const auto& p : c.pairs)
                    out << "pair {" << join_names(arena, p.request) << " } {" << join_names(arena, p.response)
                        << " }\n";
            } else {
                for (Vertex v : c.final_set.elements()) out << "final " << arena.name(v) << '\n';
            }
        },
        condition);
    return out.str();
}

MemoryStrategy parse_strategy(std::string_view text, const Arena& arena) {
    const std::vector<Line> lines = tokenize(text);
    std::optional<Player> player;
    std::optional<std::vector<std::string>> names;
    std::optional<std::string> bottom_name;
    std::vector<const Line*> tables;

    for (const Line& line : lines) {
        const std::string& d = line.tokens[0];
        if (d == "player") {
            expect_arity(line, 2);
            if (player) fail(line.number, "second 'player' line");
            if (line.tokens[1] != "0" && line.tokens[1] != "1") fail(line.number, "player must be 0 or 1");
            player = line.tokens[1] == "0" ? Player::zero : Player::one;
        } else if (d == "states") {
            if (names) fail(line.number, "second 'states' line");
            if (line.tokens.size() < 2) fail(line.number, "'states' needs at least one state");
            names.emplace(line.tokens.begin() + 1, line.tokens.end());
            for (std::size_t i = 0; i < names->size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if ((*names)[i] == (*names)[j]) fail(line.number, "duplicate state '" + (*names)[i] + "'");
        } else if (d == "bottom") {
            expect_arity(line, 2);
            if (bottom_name) fail(line.number, "second 'bottom' line");
            bottom_name = line.tokens[1];
        } else if (d == "init" || d == "update" || d == "move") {
            tables.push_back(&line);
        } else {
            fail(line.number, "unknown directive '" + d + "'");
        }
    }
    if (!player) throw ParseError("missing 'player' line");
    if (!names) throw ParseError("missing 'states' line");

    auto state = [&](const Line& line, const std::string& name) -> Memory {
        for (std::size_t i = 0; i < names->size(); ++i)
            if ((*names)[i] == name) return static_cast<Memory>(i);
        fail(line.number, "unknown state '" + name + "'");
    };
    std::optional<Memory> bottom;
    if (bottom_name) {
        auto it = std::find(names->begin(), names->end(), *bottom_name);
        if (it == names->end()) throw ParseError("bottom state '" + *bottom_name + "' is not declared");
        bottom = static_cast<Memory>(it - names->begin());
    }

    const std::size_t n = arena.size(), k = names->size();
    MemoryStrategy strat(*player, n, *names, bottom);
    std::vector<bool> has_init(n), has_update(n * k), has_move(n * k);
    for (const Line* line : tables) {
        const std::string& d = line->tokens[0];
        if (d == "init") {
            expect_arity(*line, 3);
            Vertex v = lookup(arena, *line, line->tokens[1]);
            if (has_init[v]) fail(line->number, "second init for vertex '" + line->tokens[1] + "'");
            has_init[v] = true;
            strat.set_init(v, state(*line, line->tokens[2]));
        } else if (d == "update") {
            expect_arity(*line, 4);
            Memory m = state(*line, line->tokens[1]);
            Vertex v = lookup(arena, *line, line->tokens[2]);
            if (has_update[m * n + v]) fail(line->number, "second update for this state and vertex");
            has_update[m * n + v] = true;
            strat.set_update(m, v, state(*line, line->tokens[3]));
        } else {
            if (line->tokens.size() < 3) fail(line->number, "'move' expects a vertex, a state and a set");
            Vertex v = lookup(arena, *line, line->tokens[1]);
            Memory m = state(*line, line->tokens[2]);
            if (arena.owner(v) != *player) fail(line->number, "move given for a vertex of the other player");
            std::size_t pos = 3;
            std::vector<Vertex> succ;
            for (const auto& id : read_braced(*line, pos)) succ.push_back(lookup(arena, *line, id));
            if (pos != line->tokens.size()) fail(line->number, "trailing tokens after '}'");
            if (succ.empty()) fail(line->number, "empty move set");
            std::sort(succ.begin(), succ.end());
            succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
            if (has_move[m * n + v]) fail(line->number, "second move for this vertex and state");
            has_move[m * n + v] = true;
            strat.set_moves(v, m, std::move(succ));
        }
    }

    for (Vertex v = 0; v < n; ++v)
        if (!has_init[v]) throw ParseError("no init for vertex '" + arena.name(v) + "'");
    for (Memory m = 0; m < k; ++m)
        for (Vertex v = 0; v < n; ++v) {
            if (!has_update[m * n + v])
                throw ParseError("no update for state '" + (*names)[m] + "' and vertex '" + arena.name(v) + "'");
            if (arena.owner(v) == *player && !has_move[m * n + v])
                throw ParseError("no move for vertex '" + arena.name(v) + "' and state '" + (*names)[m] + "'");
        }
    auto violations = strat.check(arena);
    if (!violations.empty()) {
        std::string msg = "invalid strategy:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw ParseError(msg);
    }
    return strat;
}

std::string serialize_strategy(const Arena& arena, const MemoryStrategy& strat) {
    std::ostringstream out;
    out << "player " << index_of(strat.player()) << '\n';
    out << "states";
    for (Memory m = 0; m < strat.state_count(); ++m) out << ' ' << strat.state_name(m);
    out << '\n';
    if (strat.bottom()) out << "bottom " << strat.state_name(*strat.bottom()) << '\n';
    for (Vertex v = 0; v < arena.size(); ++v)
        out << "init " << arena.name(v) << ' ' << strat.state_name(strat.init(v)) << '\n';
    for (Memory m = 0; m < strat.state_count(); ++m)
        for (Vertex v = 0; v < arena.size(); ++v)
            out << "update " << strat.state_name(m) << ' ' << arena.name(v) << ' '
                << strat.state_name(strat.update(m, v)) << '\n';
    for (Memory m = 0; m < strat.state_count(); ++m)
        for (Vertex v = 0; v < arena.size(); ++v) {
            if (arena.owner(v) != strat.player()) continue;
            out << "move " << arena.name(v) << ' ' << strat.state_name(m) << " {";
            for (Vertex w : strat.allowed(v, m)) out << ' ' << arena.name(w);
            out << " }\n";
        }
    return out.str();
}

namespace {

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string export_dot(const Arena& arena, const VertexSet& highlighted, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph " << quoted(graph_name) << " {\n";
    if (arena.size() == 0) {
        out << "}\n";
        return out.str();
    }
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < arena.size(); ++v) {
        out << "  n" << v << " [label=" << quoted(arena.name(v));
        if (arena.owner(v) == Player::one) out << ", shape=box";
        if (highlighted.contains(v)) out << ", peripheries=2";
        out << "];\n";
    }
    for (Vertex v = 0; v < arena.size(); ++v)
        for (Vertex w : arena.successors(v)) out << "  n" << v << " -> n" << w << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const SafetyReduction& red) { return export_dot(red.game.arena, red.game.safe, "reduction"); }

std::string export_dot(const StrategyProduct& product) {
    return export_dot(product.arena, product.accepting, "product");
}

} // namespace mullersafe
