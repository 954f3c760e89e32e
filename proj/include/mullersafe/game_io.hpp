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

/*
 * Line-oriented text formats. One directive per line, '#' starts a comment,
 * tokens are separated by whitespace and braces.
 *
 * Games:
 *   vertex <id> <0|1>
 *   edge <id> <id>
 *   condition muller       followed by   f0 { <id> ... }
 *   condition parity       followed by   priority <id> <nat>
 *   condition buchi        followed by   final <id>
 *   condition cobuchi      followed by   final <id>
 *   condition rr           followed by   pair { <id> ... } { <id> ... }
 *   condition safety       followed by   safe <id>
 *
 * Strategies (tables must be complete):
 *   player <0|1>
 *   states <name> ...
 *   bottom <name>                     (optional)
 *   init <vertex> <state>
 *   update <state> <vertex> <state>
 *   move <vertex> <state> { <vertex> ... }
 */

#include "mullersafe/arena.hpp"
#include "mullersafe/reduction.hpp"
#include "mullersafe/strategy.hpp"

#include <string>
#include <string_view>

namespace mullersafe {

/// Syntax or validation error; the message starts with "line N:" when a line is to blame.
class ParseError : public GameError {
public:
    using GameError::GameError;
};

struct Game {
    Arena arena;
    Condition condition;
};

Game parse_game(std::string_view text);
std::string serialize_game(const Arena& arena, const Condition& condition);

MemoryStrategy parse_strategy(std::string_view text, const Arena& arena);
std::string serialize_strategy(const Arena& arena, const MemoryStrategy& strat);

/// Graphviz digraph. Player 0 vertices are circles, Player 1 vertices boxes,
/// and vertices in `highlighted` get a double outline.
std::string export_dot(const Arena& arena, const VertexSet& highlighted, std::string_view graph_name = "arena");
/// The quotient safety game with its safe vertices double-outlined.
std::string export_dot(const SafetyReduction& red);
/// A strategy product with its accepting vertices double-outlined.
std::string export_dot(const StrategyProduct& product);

} // namespace mullersafe
