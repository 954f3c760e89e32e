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

#include "cli.hpp"

#include "mullersafe/game_io.hpp"
#include "mullersafe/oracle.hpp"
#include "mullersafe/reduction.hpp"
#include "mullersafe/safety_framework.hpp"
#include "mullersafe/safety_solver.hpp"
#include "mullersafe/strategy.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace mullersafe::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Game load_game(const std::string& path) {
    try {
        return parse_game(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Muller form of an infinity-set determined condition.
MullerCondition muller_of(const Game& g) {
    if (std::holds_alternative<SafetyCondition>(g.condition) ||
        std::holds_alternative<RequestResponseCondition>(g.condition))
        throw ParseError("command needs a muller, buchi, cobuchi or parity condition, got " +
                         condition_kind(g.condition));
    return encode_as_muller(g.arena, g.condition);
}

Player player_arg(int p) { return p == 0 ? Player::zero : Player::one; }

// Original-vertex set of the given player's region, read off the embedding.
VertexSet embedded_region(const Arena& arena, const SafetyReduction& red, const SafetySolution& sol, Player p) {
    VertexSet out = arena.empty_set();
    for (Vertex v = 0; v < arena.size(); ++v)
        if (sol.region(p).contains(red.embed[v])) out.insert(v);
    return out;
}

struct Common {
    int track_player = 1;
    unsigned threshold = 3;
    std::size_t max_states = 2'000'000;
};

void add_common(CLI::App* cmd, Common& c, bool tracking) {
    if (tracking) {
        cmd->add_option("--track-player", c.track_player, "Player whose loop scores are tracked")
            ->check(CLI::IsMember({0, 1}));
        cmd->add_option("--threshold", c.threshold, "Score making a class unsafe")->check(CLI::IsMember({2u, 3u}));
    }
    cmd->add_option("--max-states", c.max_states, "Limit on constructed states")->check(CLI::PositiveNumber);
}

int cmd_solve(const std::string& path, const Common& c, std::ostream& out) {
    Game g = load_game(path);
    const Arena& arena = g.arena;
    if (!std::holds_alternative<MullerCondition>(g.condition)) {
        auto res = solve_via_safety(arena, g.condition, monitor_for(arena, g.condition), {c.max_states});
        out << "W0 = " << arena.format(res.w0) << "\n";
        out << "W1 = " << arena.format(res.w0.complement()) << "\n";
        return kExitOk;
    }
    const auto& muller = std::get<MullerCondition>(g.condition);
    if (c.threshold == 3) {
        MullerSolution sol = solve_muller(arena, muller, {c.max_states});
        out << "W0 = " << arena.format(sol.w0) << "\n";
        out << "W1 = " << arena.format(sol.w1) << "\n";
        return kExitOk;
    }
    // Lower thresholds only under-approximate both regions.
    VertexSet w[2] = {arena.empty_set(), arena.empty_set()};
    for (Player tracked : {Player::one, Player::zero}) {
        ReductionOptions opts;
        opts.tracked_player = tracked;
        opts.threshold = c.threshold;
        opts.max_states = c.max_states;
        SafetyReduction red = build_safety_game(arena, muller, opts);
        SafetySolution sol = solve_safety(red.game);
        w[index_of(opponent(tracked))] = embedded_region(arena, red, sol, opponent(tracked));
    }
    out << "W0 = " << arena.format(w[0]) << "\n";
    out << "W1 = " << arena.format(w[1]) << "\n";
    out << "undetermined = " << arena.format((w[0] | w[1]).complement()) << "\n";
    return kExitOk;
}

ReductionOptions reduction_options(const Common& c) {
    ReductionOptions opts;
    opts.tracked_player = player_arg(c.track_player);
    opts.threshold = c.threshold;
    opts.max_states = c.max_states;
    return opts;
}

int cmd_reduce(const std::string& path, const Common& c, const std::string& format, std::ostream& out) {
    Game g = load_game(path);
    const Arena& arena = g.arena;
    SafetyReduction red = build_safety_game(arena, muller_of(g), reduction_options(c));
    if (format == "dot") {
        out << export_dot(red);
        return kExitOk;
    }
    SafetySolution sol = solve_safety(red.game);
    const Arena& q = red.game.arena;
    const Player safety = red.game.safety_player;
    out << "tracked-player " << index_of(red.tracked_player) << "\n";
    out << "threshold " << red.threshold << "\n";
    out << "vertices " << red.size() << "\n";
    out << "unsafe-classes " << red.unsafe_classes << "\n";
    for (Vertex cls = 0; cls < red.size(); ++cls) {
        out << "class " << q.name(cls) << " owner " << index_of(q.owner(cls)) << " winner "
            << index_of(sol.region(safety).contains(cls) ? safety : opponent(safety)) << " ->";
        for (Vertex w : q.successors(cls)) out << ' ' << q.name(w);
        out << "\n";
    }
    for (Vertex v = 0; v < arena.size(); ++v) out << "embed " << arena.name(v) << ' ' << q.name(red.embed[v]) << "\n";
    out << "W" << index_of(safety) << " = " << arena.format(embedded_region(arena, red, sol, safety)) << "\n";
    return kExitOk;
}

int cmd_strategy(const std::string& path, const Common& c, const std::string& kind, std::ostream& out) {
    Game g = load_game(path);
    SafetyReduction red = build_safety_game(g.arena, muller_of(g), reduction_options(c));
    SafetySolution sol = solve_safety(red.game);
    MemoryStrategy strat =
        kind == "permissive" ? build_permissive_strategy(red, sol) : build_antichain_strategy(red, sol);
    out << serialize_strategy(g.arena, strat);
    return kExitOk;
}

int cmd_verify(const std::string& game_path, const std::string& strat_path, const Common& c, unsigned bound,
               std::ostream& out) {
    Game g = load_game(game_path);
    const Arena& arena = g.arena;
    MullerCondition muller = muller_of(g);
    MemoryStrategy strat;
    try {
        strat = parse_strategy(read_file(strat_path), arena);
    } catch (const ParseError& e) {
        throw ParseError(strat_path + ": " + e.what());
    }
    MullerSolution sol = solve_muller(arena, muller, {c.max_states});
    const VertexSet& from = strat.player() == Player::zero ? sol.w0 : sol.w1;
    BoundCheck check = verify_bounded_scores(arena, muller, strat, from, bound);
    if (check.ok) {
        out << "scores bounded by " << bound << " from " << arena.format(from) << "\n";
        return kExitOk;
    }
    out << "score exceeds " << bound << " after " << arena.format_word(check.witness) << "\n";
    return kExitFailed;
}

int cmd_oracle(const std::string& path, const Common& c, std::ostream& out) {
    Game g = load_game(path);
    const Arena& arena = g.arena;
    MullerCondition muller = muller_of(g);
    Regions z = zielonka(arena, muller);
    MullerSolution sol = solve_muller(arena, muller, {c.max_states});
    bool agree = z.w0 == sol.w0 && z.w1 == sol.w1;
    out << "zielonka W0 = " << arena.format(z.w0) << "\n";
    out << "reduction W0 = " << arena.format(sol.w0) << "\n";
    if (!std::holds_alternative<MullerCondition>(g.condition)) {
        auto res = solve_via_safety(arena, g.condition, monitor_for(arena, g.condition), {c.max_states});
        out << "monitor W0 = " << arena.format(res.w0) << "\n";
        agree = agree && res.w0 == z.w0;
    }
    out << (agree ? "agree" : "DISAGREE") << "\n";
    return agree ? kExitOk : kExitFailed;
}

int cmd_monitor(const std::string& path, const Common& c, const std::string& kind, const std::string& format,
                std::ostream& out) {
    Game g = load_game(path);
    const Arena& arena = g.arena;
    const std::string actual = condition_kind(g.condition);
    if (!kind.empty() && kind != actual)
        throw ParseError("--kind " + kind + " does not match the game's " + actual + " condition");
    MonitorDFA dfa = monitor_for(arena, g.condition);
    auto res = solve_via_safety(arena, g.condition, dfa, {c.max_states});
    if (format == "dot") {
        out << export_dot(res.product.game.arena, res.product.game.safe, "product");
    } else if (format == "strategy") {
        out << serialize_strategy(arena, res.strategy);
    } else {
        out << "monitor " << dfa.kind() << "\n";
        out << "monitor-states " << res.product.monitor_states.size() << "\n";
        out << "product-vertices " << res.product.game.arena.size() << "\n";
        out << "W0 = " << arena.format(res.w0) << "\n";
        out << "W1 = " << arena.format(res.w0.complement()) << "\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solve Muller games through safety games", "mullersafe"};
    app.require_subcommand(1);

    Common common;
    std::string game_path, strat_path, kind, format = "text";
    unsigned bound = 2;
    GeneratorConfig gen;
    std::string gen_kind = "muller";

    auto* solve = app.add_subcommand("solve", "Print both winning regions");
    solve->add_option("game", game_path)->required();
    solve->add_option("--threshold", common.threshold, "Score making a class unsafe")->check(CLI::IsMember({2u, 3u}));
    add_common(solve, common, false);

    auto* reduce = app.add_subcommand("reduce", "Build the quotient safety game");
    reduce->add_option("game", game_path)->required();
    reduce->add_option("--out", format, "Output format")->check(CLI::IsMember({"text", "dot"}));
    add_common(reduce, common, true);

    auto* strategy = app.add_subcommand("strategy", "Print a finite-state strategy for the safety player");
    strategy->add_option("game", game_path)->required();
    kind = "antichain";
    strategy->add_option("--kind", kind)->check(CLI::IsMember({"antichain", "permissive"}));
    add_common(strategy, common, true);

    auto* verify = app.add_subcommand("verify", "Check that a strategy bounds the opponent's scores");
    verify->add_option("game", game_path)->required();
    verify->add_option("strategy", strat_path)->required();
    verify->add_option("--bound", bound)->check(CLI::PositiveNumber);
    add_common(verify, common, false);

    auto* oracle = app.add_subcommand("oracle", "Cross-check against the recursive solver");
    oracle->add_option("game", game_path)->required();
    add_common(oracle, common, false);

    auto* random = app.add_subcommand("random", "Print a seeded random game");
    random->add_option("--vertices", gen.vertices)->check(CLI::Range(1, 16));
    random->add_option("--density", gen.density)->check(CLI::Range(0.0, 1.0));
    random->add_option("--owner-bias", gen.owner_bias)->check(CLI::Range(0.0, 1.0));
    random->add_option("--seed", gen.seed);
    random->add_option("--kind", gen_kind)
        ->check(CLI::IsMember({"muller", "safety", "buchi", "cobuchi", "parity", "rr"}));
    random->add_option("--max-priority", gen.max_priority);
    random->add_option("--pairs", gen.rr_pairs);

    auto* monitor = app.add_subcommand("monitor", "Solve through a monitor automaton");
    monitor->add_option("game", game_path)->required();
    std::string monitor_kind;
    monitor->add_option("--kind", monitor_kind)
        ->check(CLI::IsMember({"buchi", "cobuchi", "parity", "rr", "muller", "safety"}));
    monitor->add_option("--out", format)->check(CLI::IsMember({"text", "dot", "strategy"}));
    add_common(monitor, common, false);

    std::vector<const char*> argv{"mullersafe"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(game_path, common, out);
        if (*reduce) return cmd_reduce(game_path, common, format, out);
        if (*strategy) return cmd_strategy(game_path, common, kind, out);
        if (*verify) return cmd_verify(game_path, strat_path, common, bound, out);
        if (*oracle) return cmd_oracle(game_path, common, out);
        if (*monitor) return cmd_monitor(game_path, common, monitor_kind, format, out);
        gen.kind = parse_condition_kind(gen_kind);
        auto [arena, condition] = random_game(gen);
        out << serialize_game(arena, condition);
        return kExitOk;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const GameError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace mullersafe::cli
