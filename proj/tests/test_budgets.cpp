#include <gtest/gtest.h>

#include <limits>

#include "netgames/budgets.hpp"
#include "support.hpp"

namespace netgames {
namespace {

BudgetParameters shift(std::uint64_t nodes, std::uint64_t deactivated) {
    BudgetParameters p;
    p.level_nodes = nodes;
    p.level_deactivated = deactivated;
    return p;
}

BudgetParameters safety(std::uint64_t active, std::uint64_t strong) {
    BudgetParameters p;
    p.active_count = active;
    p.strong_count = strong;
    return p;
}

BudgetParameters reach(std::uint64_t vertices, std::uint64_t strong) {
    BudgetParameters p;
    p.vertex_count = vertices;
    p.strong_count = strong;
    return p;
}

TEST(PerLevelShiftBound, Examples) {
    EXPECT_EQ(per_level_shift_bound(shift(10, 0)), 0u);
    EXPECT_EQ(per_level_shift_bound(shift(10, 3)), 30u);
    EXPECT_EQ(per_level_shift_bound(shift(0, 5)), 0u);
}

TEST(SafetyDeletionBudget, Examples) {
    EXPECT_EQ(safety_deletion_budget(safety(10, 4)), 16384u);
    EXPECT_EQ(safety_deletion_budget(safety(10, 0)), 0u);
    EXPECT_EQ(safety_deletion_budget(safety(4, 1)), 343u);
}

TEST(ReachabilityMoveBudget, Examples) {
    EXPECT_EQ(reachability_move_budget(reach(5, 2)), 99u);
    EXPECT_EQ(reachability_move_budget(reach(5, 0)), 0u);
    EXPECT_EQ(reachability_move_budget(reach(1, 1)), 1u);
}

TEST(Budgets, SaturateInsteadOfOverflowing) {
    const auto big = std::uint64_t{1} << 40;
    EXPECT_EQ(safety_deletion_budget(safety(big, 1)), std::numeric_limits<std::uint64_t>::max());
    EXPECT_EQ(reachability_move_budget(reach(big, 4)), std::numeric_limits<std::uint64_t>::max());
}

TEST(Budgets, ParametersOfWorkedExample) {
    const Game g = testing::load_fixture("paper-example.game");
    const auto p = BudgetParameters::of(g.initial);
    EXPECT_EQ(p.active_count, 10u);
    EXPECT_EQ(p.strong_count, 4u);
    EXPECT_EQ(p.vertex_count, 10u);
    EXPECT_EQ(safety_deletion_budget(p), 16384u);
}

TEST(Budgets, SafetyReadsActiveCount) {
    const Network n = testing::make_network(4, {{0, 1}, {1, 2}, {2, 3}}, {0}, {3});
    const auto p = BudgetParameters::of(n);
    EXPECT_EQ(p.active_count, 3u);
    EXPECT_EQ(p.vertex_count, 4u);
    EXPECT_EQ(p.level_deactivated, 1u);
    EXPECT_EQ(safety_deletion_budget(p), 125u);
    EXPECT_EQ(reachability_move_budget(p), 31u);
}

}  // namespace
}  // namespace netgames
