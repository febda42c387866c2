// Command-line front end: solve, play, reduce, verify, export-dot.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netgames/gamefile.hpp"
#include "netgames/reductions.hpp"
#include "netgames/session.hpp"
#include "netgames/solver.hpp"
#include "netgames/strategy.hpp"

namespace {

using namespace netgames;

constexpr int kExitConstructor = 0;
constexpr int kExitError = 2;
constexpr int kExitDestructor = 10;
constexpr int kExitCounterexample = 11;
constexpr int kExitUnknown = 20;

constexpr const char* kFooter = R"(Exit codes:
  0   Constructor wins (solve, play) / strategy verified (verify)
  10  Destructor wins
  11  counterexample found (verify)
  20  unknown: search limits reached, or no verdict
  2   usage, parse, or solver/fragment mismatch error

Environment:
  NETGAMES_DEPTH     default explore depth in half-moves (60)
  NETGAMES_STATES    default explore state limit (500000)
  NETGAMES_TIME_MS   default explore time limit in ms (30000)
Command-line flags take precedence over the environment.)";

int exit_code(Winner w) {
    switch (w) {
    case Winner::ConstructorWins: return kExitConstructor;
    case Winner::DestructorWins: return kExitDestructor;
    case Winner::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(value, &used);
        if (used == std::string(value).size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed " << name << "=" << value << "\n";
    return fallback;
}

SearchLimits default_limits() {
    SearchLimits l;
    l.max_depth = env_or("NETGAMES_DEPTH", l.max_depth);
    l.max_states = env_or("NETGAMES_STATES", l.max_states);
    l.max_millis = env_or("NETGAMES_TIME_MS", l.max_millis);
    return l;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out.flush());
}

Game load_game(const std::string& path) { return parse_game(read_file(path)); }

struct SolveOptions {
    std::string game;
    std::string solver = "auto";
    std::optional<std::uint64_t> depth, states, time_ms;
    std::string emit_strategy;
};

int run_solve(const SolveOptions& o) {
    const Game game = load_game(o.game);
    SearchLimits limits = default_limits();
    if (o.depth) limits.max_depth = *o.depth;
    if (o.states) limits.max_states = *o.states;
    if (o.time_ms) limits.max_millis = *o.time_ms;

    Verdict v;
    if (o.solver == "auto") {
        const SolverId id = select_solver(game);
        v = solve(game, id, limits);
        if (v.winner == Winner::Unknown && id != SolverId::Explore) v = explore(game, limits);
    } else {
        const auto id = parse_solver_id(o.solver);
        if (!id) throw CLI::ValidationError("--solver", "unknown solver '" + o.solver + "'");
        check_fragment(game, *id);
        v = solve(game, *id, limits);
    }

    std::cout << "winner: " << to_string(v.winner) << "\n"
              << "solver: " << to_string(v.solver) << "\n"
              << "certificate: " << to_string(v.kind) << "\n"
              << "states: " << v.stats.states << "\n"
              << "depth: " << v.stats.max_depth << "\n";
    if (v.stats.budget) std::cout << "budget: " << *v.stats.budget << "\n";
    if (v.stats.budget_used) std::cout << "budget-used: " << *v.stats.budget_used << "\n";
    std::cerr << "time-ms: " << v.stats.millis << "\n";

    if (!o.emit_strategy.empty()) {
        const auto strategy = extract_strategy(game, v);
        if (!strategy) {
            std::cerr << "no strategy available for this verdict\n";
        } else if (!write_file(o.emit_strategy, serialize_strategy(*strategy))) {
            std::cerr << "error: cannot write " << o.emit_strategy << "\n";
            return kExitError;
        } else {
            std::cout << "strategy: " << strategy->table.size() << " entries written to " << o.emit_strategy << "\n";
        }
    }
    return exit_code(v.winner);
}

struct PlayOptions {
    std::string game;
    std::string side = "constructor";
    std::string engine = "live";
    std::string strategy;
    std::uint64_t time_ms = 2000;
    std::uint64_t max_turns = 0;
    std::string script;
    std::string log;
};

int run_play(const PlayOptions& o) {
    const Game game = load_game(o.game);
    const Actor human = o.side == "destructor" ? Actor::Destructor : Actor::Constructor;

    std::optional<PositionalStrategy> strategy;
    if (o.engine == "strategy") {
        if (o.strategy.empty()) throw CLI::ValidationError("--strategy", "required with --engine strategy");
        strategy = parse_strategy(read_file(o.strategy));
        if (strategy->owner == human) throw StrategyMismatch("the strategy plays the human's side");
        const VerifyResult r = verify_strategy(game, *strategy);
        if (r.status == VerifyResult::Status::Counterexample) {
            std::cerr << "error: strategy does not verify: " << r.counterexample.reason << "\n";
            return kExitError;
        }
        if (r.status == VerifyResult::Status::Inconclusive) std::cerr << "warning: strategy verification inconclusive\n";
    }

    SearchLimits live = default_limits();
    live.max_millis = o.time_ms;
    PlaySession session(game, human, std::move(strategy), live);

    std::ifstream script;
    if (!o.script.empty()) {
        script.open(o.script);
        if (!script) {
            std::cerr << "error: cannot read " << o.script << "\n";
            return kExitError;
        }
    }
    std::istream& in = o.script.empty() ? std::cin : script;
    std::ofstream log;
    if (!o.log.empty()) {
        log.open(o.log, std::ios::trunc);
        if (!log) {
            std::cerr << "error: cannot write " << o.log << "\n";
            return kExitError;
        }
    }

    bool quit = false;
    while (!session.over() && !quit && (o.max_turns == 0 || session.turns() < o.max_turns)) {
        std::cout << "\n" << session.render();
        if (session.next() == human) {
            const auto moves = session.human_moves();
            for (std::size_t i = 0; i < moves.size(); ++i) std::cout << "  [" << i << "] " << describe(moves[i], game) << "\n";
            for (;;) {
                std::cout << "move (index, or q to quit)> " << std::flush;
                std::string token;
                if (!(in >> token) || token == "q") {
                    quit = true;
                    break;
                }
                std::size_t index = moves.size();
                try {
                    std::size_t used = 0;
                    index = std::stoul(token, &used);
                    if (used != token.size()) index = moves.size();
                } catch (const std::exception&) {
                }
                if (session.play_human(index)) {
                    if (log) log << token << "\n";
                    std::cout << "you: " << describe(moves[index], game) << "\n";
                    break;
                }
                std::cout << "invalid selection '" << token << "'\n";
            }
        } else {
            std::vector<std::string> notes;
            const HalfMove m = session.play_engine(notes);
            for (const auto& n : notes) std::cout << "warning: " << n << "\n";
            std::cout << "engine: " << describe(m, game) << "\n";
        }
    }

    std::cout << "\ntranscript (" << session.turns() << " moves):\n";
    Actor actor = Actor::Destructor;
    for (const auto& m : session.history()) {
        std::cout << "  " << to_string(actor) << ": " << describe(m, game) << "\n";
        actor = opponent(actor);
    }
    if (session.result()) {
        std::cout << "result: " << to_string(*session.result()) << " wins\n";
        return exit_code(*session.result());
    }
    std::cout << "result: none\n";
    return kExitUnknown;
}

int run_reduce_vc(const std::string& graph_path, std::size_t k, const std::string& out) {
    const Game game = build_vertex_cover_game(parse_graph(read_file(graph_path)), k);
    if (!write_file(out, serialize_game(game))) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitError;
    }
    std::cout << "wrote " << out << ": " << game.initial.size() << " vertices, " << game.initial.edge_count()
              << " edges\n";
    return 0;
}

int run_reduce_tm(const std::string& machine_path, const std::string& out, const std::string& manifest_path) {
    const TmGame tm = build_tm_safety_game(parse_tm(read_file(machine_path)));
    const std::string manifest = serialize_manifest(tm);
    if (!write_file(out, serialize_game(tm.game)) || (!manifest_path.empty() && !write_file(manifest_path, manifest))) {
        std::cerr << "error: cannot write output\n";
        return kExitError;
    }
    std::cout << manifest;
    return 0;
}

int run_verify(const std::string& game_path, const std::string& strategy_path, std::uint64_t max_positions) {
    const Game game = load_game(game_path);
    const PositionalStrategy strategy = parse_strategy(read_file(strategy_path));
    VerifyLimits limits;
    if (max_positions) limits.max_positions = max_positions;
    const VerifyResult r = verify_strategy(game, strategy, limits);
    switch (r.status) {
    case VerifyResult::Status::Ok:
        std::cout << "ok: " << r.positions << " positions checked\n";
        return 0;
    case VerifyResult::Status::Inconclusive:
        std::cout << "inconclusive: position limit reached after " << r.positions << " positions\n";
        return kExitUnknown;
    case VerifyResult::Status::Counterexample: break;
    }
    std::cout << "counterexample: " << r.counterexample.reason << "\n";
    Actor actor = Actor::Destructor;
    for (const auto& m : r.counterexample.prefix) {
        std::cout << "  " << to_string(actor) << ": " << describe(m, game) << "\n";
        actor = opponent(actor);
    }
    return kExitCounterexample;
}

int run_export_dot(const std::string& game_path, const std::string& out) {
    const std::string dot = export_dot(load_game(game_path));
    if (out.empty()) {
        std::cout << dot;
        return 0;
    }
    if (!write_file(out, dot)) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitError;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connectivity games on dynamic networks between Destructor and Constructor."};
    app.footer(kFooter);
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Decide the winner of a game");
    solve_cmd->add_option("game", solve_opts.game, "Game file")->required();
    solve_cmd->add_option("--solver", solve_opts.solver, "Solver to use")
        ->check(CLI::IsMember({"auto", "finite", "bounded-safety", "no-move", "bounded-reach", "explore"}));
    solve_cmd->add_option("--depth", solve_opts.depth, "Explore depth limit in half-moves");
    solve_cmd->add_option("--states", solve_opts.states, "Explore state limit");
    solve_cmd->add_option("--time-ms", solve_opts.time_ms, "Explore time limit in milliseconds");
    solve_cmd->add_option("--emit-strategy", solve_opts.emit_strategy, "Write the winner's strategy here");

    PlayOptions play_opts;
    auto* play_cmd = app.add_subcommand("play", "Play against the engine in the terminal");
    play_cmd->add_option("game", play_opts.game, "Game file")->required();
    play_cmd->add_option("--as", play_opts.side, "Side played by the human")
        ->check(CLI::IsMember({"destructor", "constructor"}));
    play_cmd->add_option("--engine", play_opts.engine, "Engine: a strategy file or live search")
        ->check(CLI::IsMember({"strategy", "live"}));
    play_cmd->add_option("--strategy", play_opts.strategy, "Strategy file for --engine strategy");
    play_cmd->add_option("--time-ms", play_opts.time_ms, "Live search budget per engine move");
    play_cmd->add_option("--max-turns", play_opts.max_turns, "Stop after this many half-moves (0: no limit)");
    play_cmd->add_option("--script", play_opts.script, "Read the human's moves from this file");
    play_cmd->add_option("--log", play_opts.log, "Record the human's moves for replay with --script");

    auto* reduce_cmd = app.add_subcommand("reduce", "Generate reduction instances");
    reduce_cmd->require_subcommand(1);
    std::string graph_path, vc_out, machine_path, tm_out, manifest_path;
    std::size_t k = 0;
    auto* vc_cmd = reduce_cmd->add_subcommand("vc", "Vertex cover to unlabeled reachability");
    vc_cmd->add_option("--graph", graph_path, "Graph file")->required();
    vc_cmd->add_option("-k", k, "Cover size")->required();
    vc_cmd->add_option("-o", vc_out, "Output game file")->required();
    auto* tm_cmd = reduce_cmd->add_subcommand("tm", "Turing machine halting to safety");
    tm_cmd->add_option("--machine", machine_path, "Machine file")->required();
    tm_cmd->add_option("-o", tm_out, "Output game file")->required();
    tm_cmd->add_option("--manifest", manifest_path, "Also write the rule manifest here");

    std::string verify_game, verify_strategy_path;
    std::uint64_t verify_states = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check a strategy against every opponent move");
    verify_cmd->add_option("game", verify_game, "Game file")->required();
    verify_cmd->add_option("--strategy", verify_strategy_path, "Strategy file")->required();
    verify_cmd->add_option("--states", verify_states, "Position limit");

    std::string dot_game, dot_out;
    auto* dot_cmd = app.add_subcommand("export-dot", "Write the initial network as DOT");
    dot_cmd->add_option("game", dot_game, "Game file")->required();
    dot_cmd->add_option("-o", dot_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*solve_cmd) return run_solve(solve_opts);
        if (*play_cmd) return run_play(play_opts);
        if (*vc_cmd) return run_reduce_vc(graph_path, k, vc_out);
        if (*tm_cmd) return run_reduce_tm(machine_path, tm_out, manifest_path);
        if (*verify_cmd) return run_verify(verify_game, verify_strategy_path, verify_states);
        if (*dot_cmd) return run_export_dot(dot_game, dot_out);
    } catch (const GameFileError& e) {
        for (const auto& d : e.diagnostics()) std::cerr << "error: " << format(d) << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
