#include <gtest/gtest.h>

#include <regex>

#include "netgames/gamefile.hpp"
#include "support.hpp"

namespace netgames {
namespace {

using testing::fixture_path;
using testing::load_fixture;
using testing::vertex;

const char* kMinimal = R"({
  "version": 1,
  "objective": "safety",
  "alphabet": ["_"],
  "nodes": [
    {"id":"a","label":"_","active":true,"strong":true}
  ],
  "edges": [],
  "rules": []
}
)";

ErrorCode error_of(const std::string& text) {
    try {
        parse_game(text);
    } catch (const GameFileError& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed without error";
    return ErrorCode::Io;
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    if (at == std::string::npos) throw std::invalid_argument("pattern not found: " + from);
    return text.replace(at, from.size(), to);
}

std::size_t count(const std::string& text, const std::regex& re) {
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

TEST(ParseGame, WorkedExample) {
    const Game g = load_fixture("paper-example.game");
    EXPECT_EQ(g.objective, Objective::Safety);
    EXPECT_EQ(g.names, (std::vector<std::string>{"s1", "s2", "u1", "u2", "u3", "v1", "v2", "w1", "w2", "w3"}));
    ASSERT_EQ(g.rules.size(), 1u);
    EXPECT_EQ(g.rules[0], Rule(MoveRule{kBlank, kBlank}));
    const LabelId bot = *g.alphabet.find("bot");
    for (const char* name : {"s1", "s2"})
        EXPECT_EQ(g.initial.node_at(*g.initial.position(vertex(g, name))).label, bot);
    for (const char* name : {"s1", "s2", "u1", "w1"}) EXPECT_TRUE(g.initial.node_at(*g.initial.position(vertex(g, name))).strong);
    EXPECT_TRUE(g.initial.adjacent(vertex(g, "v1"), vertex(g, "w1")));
    EXPECT_FALSE(g.initial.adjacent(vertex(g, "v1"), vertex(g, "v2")));
}

TEST(SerializeGame, WorkedExampleMatchesFixture) {
    const std::string text = read_file(fixture_path("paper-example.game"));
    EXPECT_EQ(serialize_game(parse_game(text)), text);
}

TEST(SerializeGame, Idempotent) {
    const Game g = load_fixture("paper-example-with-create.game");
    const std::string once = serialize_game(g);
    EXPECT_EQ(parse_game(once), g);
    EXPECT_EQ(serialize_game(parse_game(once)), once);
}

TEST(SerializeGame, MinimalDocument) {
    const Game g = parse_game(kMinimal);
    EXPECT_TRUE(g.rules.empty());
    EXPECT_EQ(serialize_game(g), kMinimal);
}

TEST(ParseGame, ReachabilityMustStartDisconnected) {
    const std::string text = replace(read_file(fixture_path("paper-example.game")), "\"safety\"", "\"reachability\"");
    EXPECT_EQ(error_of(text), ErrorCode::ObjectivePrecondition);
}

TEST(ParseGame, UnknownLabelInRule) {
    const std::string text = replace(read_file(fixture_path("paper-example.game")), R"("to":"_")", R"("to":"x")");
    EXPECT_EQ(error_of(text), ErrorCode::UnknownLabel);
    try {
        parse_game(text);
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.diagnostics().front().path, "/rules/0/to");
        EXPECT_NE(std::string(e.what()).find("unknown label"), std::string::npos);
    }
}

TEST(ParseGame, ErrorCodes) {
    const std::string base = read_file(fixture_path("paper-example.game"));
    EXPECT_EQ(error_of("{ not json"), ErrorCode::Syntax);
    EXPECT_EQ(error_of(replace(base, "\"version\": 1", "\"version\": 2")), ErrorCode::Version);
    EXPECT_EQ(error_of(replace(base, "\"version\": 1,", "")), ErrorCode::Version);
    EXPECT_EQ(error_of(replace(base, R"("id":"u2")", R"("id":"u1")")), ErrorCode::DuplicateId);
    EXPECT_EQ(error_of(replace(base, R"(["v2","w2"])", R"(["v2","zz"])")), ErrorCode::UnknownNode);
    EXPECT_EQ(error_of(replace(base, R"("id":"u1","label":"_","active":true)", R"("id":"u1","label":"_","active":false)")),
              ErrorCode::InvalidNetwork);
    EXPECT_EQ(error_of(replace(base, R"("kind":"move")", R"("kind":"teleport")")), ErrorCode::Schema);
    EXPECT_EQ(error_of(replace(base, R"(["_","bot"])", R"(["bot"])")), ErrorCode::Schema);
}

TEST(ParseGame, SyntaxErrorHasLine) {
    try {
        parse_game("{\n  \"version\": 1,\n  oops\n}");
        FAIL();
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Syntax);
        EXPECT_EQ(e.diagnostics().front().line, 3u);
    }
}

TEST(ParseGame, ReportsEveryUnknownLabel) {
    std::string text = replace(read_file(fixture_path("paper-example.game")), R"("to":"_")", R"("to":"x")");
    text = replace(text, R"("from":"_")", R"("from":"y")");
    try {
        parse_game(text);
        FAIL();
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.diagnostics().size(), 2u);
    }
}

TEST(Strategy, RoundTripThenVerify) {
    const Game g = load_fixture("paper-example.game");
    const auto s = extract_strategy(g, solve_finite(g));
    ASSERT_TRUE(s);
    const std::string text = serialize_strategy(*s);
    const PositionalStrategy back = parse_strategy(text);
    EXPECT_EQ(back, *s);
    EXPECT_EQ(serialize_strategy(back), text);
    EXPECT_TRUE(verify_strategy(g, back).ok());
}

TEST(Strategy, BudgetedRoundTrip) {
    const Game g = load_fixture("paper-example.game");
    const auto s = extract_strategy(g, solve_safety_bounded(g));
    ASSERT_TRUE(s);
    EXPECT_EQ(parse_strategy(serialize_strategy(*s)), *s);
}

TEST(Strategy, EmptyTableIsValidButFailsVerification) {
    PositionalStrategy s;
    s.owner = Actor::Destructor;
    s.alphabet = {"_", "bot"};
    const PositionalStrategy back = parse_strategy(serialize_strategy(s));
    EXPECT_TRUE(back.table.empty());
    EXPECT_EQ(verify_strategy(load_fixture("paper-example.game"), back).status, VerifyResult::Status::Counterexample);
}

TEST(Strategy, CorruptedKeyIsMalformed) {
    const Game g = load_fixture("paper-example.game");
    const auto s = extract_strategy(g, solve_finite(g));
    ASSERT_TRUE(s);
    std::string text = serialize_strategy(*s);
    const auto at = text.find("\"key\":\"") + 7;
    text.replace(at + 2, 6, "zzzzzz");
    try {
        parse_strategy(text);
        FAIL();
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedKey);
        EXPECT_EQ(to_string(e.code()), "malformed key");
    }

    // Valid hex that does not describe a canonical position.
    std::string shuffled = serialize_strategy(*s);
    const auto k = shuffled.find("\"key\":\"") + 7;
    shuffled.replace(k, 2, "07");
    try {
        parse_strategy(shuffled);
        FAIL();
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedKey);
    }
}

TEST(Strategy, LabelOutsideAlphabetIsDangling) {
    const Game g = load_fixture("paper-example.game");
    auto s = extract_strategy(g, solve_finite(g));
    ASSERT_TRUE(s);
    s->alphabet = {"_"};
    try {
        parse_strategy(serialize_strategy(*s));
        FAIL();
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.code(), ErrorCode::DanglingKey);
    }
}

TEST(TmFile, RoundTrip) {
    const std::string text = read_file(fixture_path("halt1.tm"));
    const TuringMachineSpec tm = parse_tm(text);
    EXPECT_EQ(tm.states.size(), 2u);
    EXPECT_EQ(parse_tm(serialize_tm(tm)), tm);
    EXPECT_EQ(serialize_tm(tm), text);
}

TEST(TmFile, InvalidMachine) {
    const std::string text = replace(read_file(fixture_path("halt1.tm")), "\"initial\": \"q0\"", "\"initial\": \"q9\"");
    try {
        parse_tm(text);
        FAIL();
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
    }
}

TEST(GraphFile, RoundTrip) {
    const std::string text = read_file(fixture_path("k3.graph"));
    const UndirectedGraphSpec g = parse_graph(text);
    EXPECT_EQ(g.edges.size(), 3u);
    EXPECT_EQ(serialize_graph(g), text);
}

TEST(Manifest, ListsInitialVertices) {
    const std::string m = serialize_manifest(build_tm_safety_game(parse_tm(read_file(fixture_path("halt1.tm")))));
    EXPECT_NE(m.find("\"initial_vertices\": 7"), std::string::npos);
    EXPECT_NE(m.find("\"initial_edges\": 9"), std::string::npos);
}

TEST(ExportDot, WorkedExample) {
    const std::string dot = export_dot(load_fixture("paper-example.game"));
    EXPECT_EQ(count(dot, std::regex(R"(^  "[^"]+" \[label=)", std::regex::multiline)), 10u);
    EXPECT_EQ(count(dot, std::regex(" -- ")), 14u);
    EXPECT_EQ(count(dot, std::regex("style=bold")), 4u);
    EXPECT_EQ(count(dot, std::regex("style=dashed")), 0u);
    EXPECT_EQ(dot, export_dot(load_fixture("paper-example.game")));
}

TEST(ExportDot, DeletedNodeIsDashed) {
    const Game g = load_fixture("paper-example.game");
    const Network after = apply_move(g.initial, g.rules, HalfMove::remove(vertex(g, "w3")));
    const std::string dot = export_dot(after, g.alphabet, g.names);
    EXPECT_EQ(count(dot, std::regex("style=dashed")), 1u);
    EXPECT_NE(dot.find(R"("w3" [label="w3\n_", style=dashed])"), std::string::npos);
}

TEST(ExportDot, IdFaithfulNotCanonical) {
    const Network a = testing::make_network(2, {{0, 1}}, {0});
    const Network b = testing::make_network(2, {{0, 1}}, {1});
    ASSERT_EQ(canonical_key(a, Actor::Destructor, false), canonical_key(b, Actor::Destructor, false));
    EXPECT_NE(export_dot(a, Alphabet{}), export_dot(b, Alphabet{}));
}

TEST(DescribeNetwork, Format) {
    const Network n = testing::make_network(3, {{0, 1}, {1, 2}}, {0}, {2});
    EXPECT_EQ(describe_network(n, Alphabet{}), "0:_* 1:_ 2:_~ | 0-1 1-2");
}

TEST(ReadFile, MissingFileIsIoError) {
    try {
        read_file("/nonexistent/netgames/file.game");
        FAIL();
    } catch (const GameFileError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}

}  // namespace
}  // namespace netgames
