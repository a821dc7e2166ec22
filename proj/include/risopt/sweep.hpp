#ifndef RISOPT_SWEEP_HPP
#define RISOPT_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "risopt/optimizer.hpp"
#include "risopt/scenario.hpp"

namespace risopt {

/// One (P_c, y_s) point of a chip-power sweep. Optimum fields are empty
/// when the point is infeasible.
struct SweepRow {
    double p_c_w = 0.0;
    double y_s_m = 0.0;
    bool feasible = false;
    std::optional<double> r1h_opt_m;
    std::optional<double> a_opt;
    std::optional<double> snr_opt_db;
    std::optional<double> p_harv_w;
    double p_ris_w = 0.0;
};

/// `points` values spaced evenly in log10 between start and stop inclusive.
std::vector<double> log_space(double start, double stop, int points);

/// Copy of `base` with the chip-power override and lateral offset replaced.
Scenario with_chip_power_and_offset(const Scenario& base, double p_c_w, double y_s_m);

/// Solves every combination and returns rows ordered by (y_s, P_c)
/// ascending. Points are spread over `threads` workers; the output order and
/// contents do not depend on the worker count.
std::vector<SweepRow> run_sweep(const Scenario& base, std::vector<double> p_c_values,
                                std::vector<double> y_s_values, const SearchConfig& search = {},
                                unsigned threads = 1);

SweepRow make_sweep_row(double p_c_w, double y_s_m, const PlacementSolution& solution);

inline constexpr const char* kSweepCsvHeader = "p_c_w,y_s_m,feasible,r1h_opt_m,a_opt,snr_opt_db,p_harv_w,p_ris_w";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Parses a CSV produced by write_sweep_csv.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace risopt

#endif
