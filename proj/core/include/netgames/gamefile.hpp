#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netgames/game.hpp"
#include "netgames/reductions.hpp"
#include "netgames/strategy.hpp"

namespace netgames {

inline constexpr int kFormatVersion = 1;

enum class ErrorCode {
    Syntax,
    Schema,
    Version,
    UnknownLabel,
    DuplicateId,
    UnknownNode,
    InvalidNetwork,
    InvalidRule,
    ObjectivePrecondition,
    MalformedKey,
    DanglingKey,
    InvalidSpec,
    Io,
};

/// Short stable name of a code, e.g. "unknown label".
std::string to_string(ErrorCode code);

struct Diagnostic {
    ErrorCode code = ErrorCode::Syntax;
    /// 1-based; 0 when the error is not tied to a text position.
    std::size_t line = 0;
    std::size_t column = 0;
    /// JSON pointer to the offending value, if any.
    std::string path;
    std::string message;
};

std::string format(const Diagnostic& d);

class GameFileError : public std::runtime_error {
public:
    explicit GameFileError(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
    ErrorCode code() const { return diagnostics_.front().code; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Loads a game and enforces the objective's precondition on the initial
/// network. Throws GameFileError listing every problem found.
Game parse_game(std::string_view text);
/// Nodes in id order, edges sorted, rules in declaration order.
std::string serialize_game(const Game& game);

PositionalStrategy parse_strategy(std::string_view text);
std::string serialize_strategy(const PositionalStrategy& strategy);

TuringMachineSpec parse_tm(std::string_view text);
std::string serialize_tm(const TuringMachineSpec& tm);

UndirectedGraphSpec parse_graph(std::string_view text);
std::string serialize_graph(const UndirectedGraphSpec& graph);

std::string serialize_manifest(const TmGame& tm_game);

/// Deterministic DOT text: nodes in id order, strong nodes bold, deleted
/// nodes dashed. Faithful to vertex ids, not canonical.
std::string export_dot(const Network& network, const Alphabet& alphabet, const std::vector<std::string>& names = {});
std::string export_dot(const Game& game);

/// One-line text form of a network, e.g. "0:bot* 1:_ 2:_~ | 0-1 1-2" where
/// '*' marks strong and '~' deleted vertices.
std::string describe_network(const Network& network, const Alphabet& alphabet);

/// Reads a whole file; throws GameFileError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace netgames
