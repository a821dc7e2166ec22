#ifndef RISOPT_ORACLE_HPP
#define RISOPT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "risopt/scenario.hpp"

namespace risopt::oracle {

// Brute-force reference solvers. They only use the geometry and link
// evaluation primitives, never the closed-form optimizer, so agreement with
// the optimizer is a genuine check.

struct LatticeSpec {
    double r1h_step_m = 0.5;
    double a_step = 0.001;
    double r1h_min_m = 0.0;
    std::optional<double> r1h_max_m;  // defaults to the TX-RX span
};

struct OracleResult {
    bool feasible = false;
    double r1h_m = 0.0;
    double amplitude = 0.0;
    double snr_linear = 0.0;
    double snr_db = 0.0;
    double p_harv_w = 0.0;
    double p_ris_w = 0.0;
    double r1h_step_m = 0.0;
    double a_step = 0.0;
    std::size_t columns_feasible = 0;
    // First-order SNR change from moving the amplitude by one lattice step,
    // a_step * dSNR/dA = 2 a_step SNR / A.
    double snr_slack_linear = 0.0;
};

/// Scans the (r1h, A) lattice. In each r1h column the A closest to the
/// harvest equality is kept; columns where even A = 0 cannot cover the
/// consumption are dropped. The kept point with the highest co-phased SNR
/// wins, lowest r1h first on ties.
OracleResult brute_force_solve(const Scenario& scenario, const LatticeSpec& lattice);

struct PhaseSearchResult {
    std::vector<double> phases_rad;
    double snr_linear = 0.0;
    std::uint64_t profiles_evaluated = 0;
};

inline constexpr std::size_t kMaxEnumeratedElements = 9;
inline constexpr std::uint64_t kMaxEnumeratedProfiles = 100'000'000;

/// Enumerates every profile with phases from {2 pi k / levels}, uniform
/// amplitude, at a fixed placement. Throws std::invalid_argument when the
/// surface has more than 9 elements or levels^M_s exceeds 1e8.
PhaseSearchResult exhaustive_phase_search(const Scenario& scenario, double r1h_m, int phase_levels,
                                          double uniform_amplitude);

/// Copy of `scenario` shrunk to rows x cols elements, spacing unchanged.
Scenario shrink_surface(const Scenario& scenario, int rows, int cols);

}  // namespace risopt::oracle

#endif
