#ifndef RISOPT_VALIDATION_HPP
#define RISOPT_VALIDATION_HPP

#include <iosfwd>
#include <optional>

#include "risopt/optimizer.hpp"
#include "risopt/oracle.hpp"

namespace risopt {

struct ValidationOptions {
    oracle::LatticeSpec lattice;
    int phase_levels = 16;
    double snr_tolerance_db = 0.1;
    std::optional<double> r1h_tolerance_m;  // defaults to one oracle r1h step
    SearchConfig search;
};

/// Closed-form solution checked against the brute-force oracles.
struct ValidationReport {
    PlacementSolution analytic;
    oracle::OracleResult oracle;
    double snr_tolerance_db = 0.0;
    double r1h_tolerance_m = 0.0;
    std::optional<double> snr_delta_db;  // |analytic - oracle|, when both feasible
    std::optional<double> r1h_delta_m;
    bool placement_pass = false;

    // Quantized-phase enumeration on a 2 x 2 copy of the surface.
    int phase_levels = 0;
    double phase_r1h_m = 0.0;
    double phase_amplitude = 0.0;
    double phase_best_snr = 0.0;
    double phase_cophased_snr = 0.0;
    double phase_floor_ratio = 0.0;  // cos^2(pi / levels)
    bool phase_pass = false;

    bool passed() const { return placement_pass && phase_pass; }
};

/// Worst-case coherence retained when every phase is rounded to the nearest
/// of `levels` uniformly spaced values; zero for fewer than two levels.
double quantization_floor(int levels);

ValidationReport run_validation(const Scenario& scenario, const ValidationOptions& options = {});

void print_validation_report(std::ostream& out, const ValidationReport& report);

}  // namespace risopt

#endif
