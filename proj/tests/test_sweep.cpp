#include <gtest/gtest.h>

#include <sstream>

#include "risopt/sweep.hpp"
#include "test_support.hpp"

using namespace risopt;
using risopt::testing::table1;

namespace {

std::string csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_sweep_csv(out, rows);
    return out.str();
}

}  // namespace

TEST(LogSpace, EndpointsAndRatio) {
    const auto v = log_space(1e-8, 1e-4, 30);
    ASSERT_EQ(v.size(), 30u);
    EXPECT_EQ(v.front(), 1e-8);
    EXPECT_EQ(v.back(), 1e-4);
    const double ratio = std::pow(1e4, 1.0 / 29);
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_NEAR(v[i] / v[i - 1], ratio, 1e-12);

    EXPECT_EQ(log_space(3e-6, 1e-4, 1), std::vector<double>{3e-6});
    EXPECT_THROW(log_space(0.0, 1.0, 3), std::invalid_argument);
    EXPECT_THROW(log_space(1e-6, 1e-5, 0), std::invalid_argument);
}

TEST(RunSweep, OrderedByOffsetThenChipPower) {
    const auto rows = run_sweep(table1(), {1e-5, 1e-7, 1e-6}, {20.0, 5.0}, {}, 3);
    ASSERT_EQ(rows.size(), 6u);
    const double expect_ys[] = {5, 5, 5, 20, 20, 20};
    const double expect_pc[] = {1e-7, 1e-6, 1e-5, 1e-7, 1e-6, 1e-5};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].y_s_m, expect_ys[i]);
        EXPECT_EQ(rows[i].p_c_w, expect_pc[i]);
        EXPECT_EQ(rows[i].p_ris_w, 2500 * expect_pc[i]);
    }
}

TEST(RunSweep, InfeasibleRowsHaveEmptyOptimum) {
    const auto rows = run_sweep(table1(), {1e-3}, {5.0});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_FALSE(rows[0].feasible);
    EXPECT_FALSE(rows[0].r1h_opt_m);
    EXPECT_FALSE(rows[0].snr_opt_db);
    EXPECT_EQ(csv(rows), std::string(kSweepCsvHeader) + "\n0.001,5,0,,,,,2.5\n");
}

TEST(RunSweep, SinglePointMatchesSolve) {
    Scenario s = table1();
    const auto rows = run_sweep(s, {1e-6}, {5.0});
    const auto sol = solve_placement(s);
    ASSERT_TRUE(rows[0].feasible && sol.feasible());
    EXPECT_EQ(*rows[0].r1h_opt_m, sol.optimum->r1h_m);
    EXPECT_EQ(*rows[0].a_opt, sol.optimum->amplitude);
    EXPECT_EQ(*rows[0].snr_opt_db, sol.optimum->snr_db);
    EXPECT_EQ(*rows[0].p_harv_w, sol.optimum->p_harv_w);
}

TEST(RunSweep, OutputIndependentOfThreadCount) {
    const auto pcs = log_space(1e-8, 1e-4, 12);
    const std::string one = csv(run_sweep(table1(), pcs, {5, 10, 20}, {}, 1));
    for (const unsigned t : {2u, 4u, 7u, 64u}) EXPECT_EQ(csv(run_sweep(table1(), pcs, {5, 10, 20}, {}, t)), one) << t;
}

TEST(RunSweep, RejectsBadInputsUpFront) {
    EXPECT_THROW(run_sweep(table1(), {}, {5.0}), std::invalid_argument);
    EXPECT_THROW(run_sweep(table1(), {1e-6}, {}), std::invalid_argument);
    EXPECT_THROW(run_sweep(table1(), {1e-6}, {5.0, 0.0}), ConfigError);
    EXPECT_THROW(run_sweep(table1(), {1e-6, -1e-6}, {5.0}), ConfigError);
}

TEST(RunSweep, TrendsInChipPowerAndNesting) {
    const auto pcs = log_space(1e-8, 1e-4, 20);
    const std::vector<double> ys{5, 10, 20};
    const auto rows = run_sweep(table1(), pcs, ys, {}, 4);
    for (std::size_t y = 0; y < ys.size(); ++y) {
        for (std::size_t i = 1; i < pcs.size(); ++i) {
            const auto& a = rows[y * pcs.size() + i - 1];
            const auto& b = rows[y * pcs.size() + i];
            if (!b.feasible) continue;
            ASSERT_TRUE(a.feasible);
            EXPECT_LE(*b.snr_opt_db, *a.snr_opt_db);
            EXPECT_LE(*b.a_opt, *a.a_opt);
            EXPECT_LE(*b.r1h_opt_m, *a.r1h_opt_m);
        }
    }
    // A point feasible farther out stays feasible closer in.
    for (std::size_t i = 0; i < pcs.size(); ++i)
        for (std::size_t y = 1; y < ys.size(); ++y)
            if (rows[y * pcs.size() + i].feasible) EXPECT_TRUE(rows[(y - 1) * pcs.size() + i].feasible);
}

TEST(SweepCsv, RoundTripIsExact) {
    const auto rows = run_sweep(table1(), log_space(1e-8, 1e-4, 9), {5, 20}, {}, 2);
    std::istringstream in(csv(rows));
    const auto back = read_sweep_csv(in);
    ASSERT_EQ(back.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(back[i].p_c_w, rows[i].p_c_w);
        EXPECT_EQ(back[i].y_s_m, rows[i].y_s_m);
        EXPECT_EQ(back[i].feasible, rows[i].feasible);
        EXPECT_EQ(back[i].r1h_opt_m, rows[i].r1h_opt_m);
        EXPECT_EQ(back[i].a_opt, rows[i].a_opt);
        EXPECT_EQ(back[i].snr_opt_db, rows[i].snr_opt_db);
        EXPECT_EQ(back[i].p_harv_w, rows[i].p_harv_w);
        EXPECT_EQ(back[i].p_ris_w, rows[i].p_ris_w);
    }
    std::istringstream bad("p_c_w,y_s_m\n");
    EXPECT_THROW(read_sweep_csv(bad), std::runtime_error);
}
