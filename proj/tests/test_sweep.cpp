#include <gtest/gtest.h>

#include "splice/sweep.hpp"

using namespace splice;

TEST(Sweep, GridExpansion) {
    const auto exhaustive = expand_grid({{5, 7}, {2, 3}, 10000, 10, 0});
    // 2^2 + 2^3 + 4^2 + 4^3
    EXPECT_EQ(exhaustive.size(), 92u);
    EXPECT_EQ(exhaustive.front(), (GridPoint{5, 2, {1, 1}}));
    const auto sampled = expand_grid({{11}, {4}, 100, 50, 7});
    EXPECT_EQ(sampled.size(), 50u);
    EXPECT_TRUE(std::is_sorted(sampled.begin(), sampled.end(), [](auto& a, auto& b) { return a.r < b.r; }));
    EXPECT_EQ(sampled, expand_grid({{11}, {4}, 100, 50, 7}));
    EXPECT_NE(sampled, expand_grid({{11}, {4}, 100, 50, 8}));
    EXPECT_THROW(expand_grid({{7}, {1}, 100, 10, 0}), Error);
    EXPECT_THROW(expand_grid({{9}, {2}, 100, 10, 0}), Error);
}

TEST(Sweep, PointPasses) {
    const PointReport r = verify_point({7, 2, {2, 3}});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.e1, 28);
    EXPECT_EQ(r.sigma1, (Weight{{1, 2}, 28}));
    bool saw_duplication = false;
    for (const auto& c : r.checks) {
        EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
        saw_duplication |= c.name == "spliced.f2_duplication";
    }
    EXPECT_TRUE(saw_duplication);
}

TEST(Sweep, BadPointIsRecordedNotThrown) {
    const PointReport r = verify_point({7, 2, {0, 3}});
    EXPECT_FALSE(r.pass);
}

TEST(Sweep, SerialMatchesParallel) {
    const auto points = expand_grid({{5, 7, 11}, {2, 3}, 10000, 10, 3});
    const auto serial = verify_points_serial(points);
    for (int jobs : {1, 2, 4}) EXPECT_EQ(verify_points_parallel(points, jobs), serial);
    EXPECT_EQ(run_verify_lemmas({{5, 7}, {2, 3}, 10000, 10, 0}, 3).points, run_verify_lemmas({{5, 7}, {2, 3}, 10000, 10, 0}, 1).points);
}

TEST(Sweep, ChecksHoldPerDegree) {
    for (int f = 2; f <= 6; ++f) {
        const MuTable table(Params(7, f));
        EXPECT_EQ(checks::recurrence_consistency(table), "");
        EXPECT_EQ(checks::sign_identity(table), "");
        EXPECT_EQ(checks::sign_aperiodicity(table), "");
        EXPECT_EQ(checks::sign_cyclic_classes(table), "");
        EXPECT_EQ(checks::zero_count_pattern(table), "");
        EXPECT_EQ(checks::tuple_distinctness(table), "");
        EXPECT_EQ(checks::proof_inequalities(table), "");
    }
}
