#include <gtest/gtest.h>

#include <random>

#include "netgames/session.hpp"
#include "support.hpp"

namespace netgames {
namespace {

using testing::load_fixture;

PositionalStrategy strategy_for(const Game& g, const Verdict& v) {
    auto s = extract_strategy(g, v);
    if (!s) throw std::runtime_error("no strategy");
    return *s;
}

// Plays random human moves until the game ends or `max_turns` half-moves.
void play_randomly(PlaySession& session, std::mt19937_64& rng, std::size_t max_turns, std::vector<std::string>& notes) {
    while (!session.over() && session.turns() < max_turns) {
        if (session.next() == session.human()) {
            const auto moves = session.human_moves();
            ASSERT_FALSE(moves.empty());
            ASSERT_TRUE(session.play_human(std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)));
        } else {
            session.play_engine(notes);
        }
    }
}

TEST(PlaySession, QuitImmediately) {
    const Game g = load_fixture("paper-example.game");
    PlaySession session(g, Actor::Destructor, std::nullopt, SearchLimits{});
    EXPECT_EQ(session.turns(), 0u);
    EXPECT_FALSE(session.over());
    EXPECT_FALSE(session.result().has_value());
    EXPECT_EQ(session.human_moves().size(), 7u);
}

TEST(PlaySession, RenderShowsStatus) {
    const Game g = load_fixture("paper-example.game");
    PlaySession session(g, Actor::Destructor, std::nullopt, SearchLimits{});
    const std::string view = session.render();
    EXPECT_NE(view.find("s1:bot*"), std::string::npos);
    EXPECT_NE(view.find("connected, level 6, destructor to move"), std::string::npos);
}

TEST(PlaySession, RejectsOutOfRangeIndex) {
    const Game g = load_fixture("paper-example.game");
    PlaySession session(g, Actor::Destructor, std::nullopt, SearchLimits{});
    EXPECT_FALSE(session.play_human(99));
    EXPECT_EQ(session.turns(), 0u);
}

TEST(PlaySession, DestructorStrategyAlwaysDisconnects) {
    const Game g = load_fixture("paper-example.game");
    const PositionalStrategy s = strategy_for(g, solve_finite(g));
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round) {
        PlaySession session(g, Actor::Constructor, s, SearchLimits{});
        std::vector<std::string> notes;
        play_randomly(session, rng, 200, notes);
        ASSERT_TRUE(session.over()) << "round " << round;
        EXPECT_EQ(*session.result(), Winner::DestructorWins);
        EXPECT_FALSE(is_connected(session.network()));
        EXPECT_TRUE(notes.empty());
    }
}

TEST(PlaySession, ConstructorStrategyKeepsConnectivity) {
    const Game g = load_fixture("paper-example-with-create.game");
    const PositionalStrategy s = strategy_for(g, explore(g));
    std::mt19937_64 rng(5);
    for (int round = 0; round < 10; ++round) {
        PlaySession session(g, Actor::Destructor, s, SearchLimits{});
        std::vector<std::string> notes;
        while (!session.over() && session.turns() < 50) {
            if (session.next() == Actor::Destructor) {
                const auto moves = session.human_moves();
                session.play_human(std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng));
            } else {
                session.play_engine(notes);
            }
            ASSERT_TRUE(is_connected(session.network())) << "round " << round << " turn " << session.turns();
        }
        EXPECT_FALSE(session.over());
        EXPECT_TRUE(notes.empty());
    }
}

TEST(PlaySession, LiveEngineFindsWinningMoves) {
    const Game g = load_fixture("paper-example.game");
    std::mt19937_64 rng(9);
    PlaySession session(g, Actor::Constructor, std::nullopt, SearchLimits{});
    std::vector<std::string> notes;
    play_randomly(session, rng, 200, notes);
    ASSERT_TRUE(session.over());
    EXPECT_EQ(*session.result(), Winner::DestructorWins);
}

TEST(PlaySession, BudgetedStrategyTracksBudget) {
    const Game g = load_fixture("paper-example.game");
    const PositionalStrategy s = strategy_for(g, solve_safety_bounded(g));
    std::mt19937_64 rng(13);
    PlaySession session(g, Actor::Constructor, s, SearchLimits{});
    std::vector<std::string> notes;
    play_randomly(session, rng, 200, notes);
    ASSERT_TRUE(session.over());
    EXPECT_EQ(*session.result(), Winner::DestructorWins);
    EXPECT_TRUE(notes.empty());
}

}  // namespace
}  // namespace netgames
