#include "risopt/validation.hpp"

#include <cmath>
#include <ostream>

#include "risopt/link.hpp"

namespace risopt {

double quantization_floor(int levels) {
    if (levels < 2) return 0.0;
    const double c = std::cos(kPi / levels);
    return c * c;
}

ValidationReport run_validation(const Scenario& s, const ValidationOptions& options) {
    ValidationReport report;
    report.analytic = solve_placement(s, options.search);
    report.oracle = oracle::brute_force_solve(s, options.lattice);
    report.snr_tolerance_db = options.snr_tolerance_db;
    report.r1h_tolerance_m = options.r1h_tolerance_m.value_or(options.lattice.r1h_step_m);

    const auto& analytic = report.analytic.optimum;
    if (analytic && report.oracle.feasible) {
        report.snr_delta_db = std::abs(analytic->snr_db - report.oracle.snr_db);
        report.r1h_delta_m = std::abs(analytic->r1h_m - report.oracle.r1h_m);
        report.placement_pass =
            *report.snr_delta_db <= report.snr_tolerance_db && *report.r1h_delta_m <= report.r1h_tolerance_m;
    } else {
        // Both must agree that nothing is feasible.
        report.placement_pass = !analytic && !report.oracle.feasible;
    }

    const Scenario small = oracle::shrink_surface(s, 2, 2);
    report.phase_levels = options.phase_levels;
    report.phase_r1h_m = analytic ? analytic->r1h_m : s.txrx_horizontal_m / 2;
    report.phase_amplitude = analytic ? analytic->amplitude : 1.0;
    const auto best = oracle::exhaustive_phase_search(small, report.phase_r1h_m, options.phase_levels,
                                                      report.phase_amplitude);
    report.phase_best_snr = best.snr_linear;
    report.phase_cophased_snr = snr_cophased(report.phase_r1h_m, report.phase_amplitude, small);
    report.phase_floor_ratio = quantization_floor(options.phase_levels);
    const double slack = 1e-12 * report.phase_cophased_snr;
    report.phase_pass = report.phase_best_snr <= report.phase_cophased_snr + slack &&
                        report.phase_best_snr >= report.phase_floor_ratio * report.phase_cophased_snr - slack;
    return report;
}

namespace {

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

void print_validation_report(std::ostream& out, const ValidationReport& r) {
    out << "placement check (oracle lattice r1h_step_m=" << format_number(r.oracle.r1h_step_m)
        << " a_step=" << format_number(r.oracle.a_step) << ")\n";
    if (const auto& a = r.analytic.optimum)
        out << "  analytic: r1h_m=" << format_number(a->r1h_m) << " a=" << format_number(a->amplitude)
            << " snr_db=" << format_number(a->snr_db) << '\n';
    else
        out << "  analytic: infeasible\n";
    if (r.oracle.feasible)
        out << "  oracle:   r1h_m=" << format_number(r.oracle.r1h_m) << " a=" << format_number(r.oracle.amplitude)
            << " snr_db=" << format_number(r.oracle.snr_db)
            << " slack_snr_db=" << format_number(linear_to_db(1.0 + r.oracle.snr_slack_linear / r.oracle.snr_linear))
            << '\n';
    else
        out << "  oracle:   infeasible\n";
    if (r.snr_delta_db)
        out << "  delta_snr_db=" << format_number(*r.snr_delta_db) << " (tol " << format_number(r.snr_tolerance_db)
            << ")  delta_r1h_m=" << format_number(*r.r1h_delta_m) << " (tol " << format_number(r.r1h_tolerance_m)
            << ")\n";
    out << "  " << verdict(r.placement_pass) << '\n';

    out << "phase check (2x2, " << r.phase_levels << " levels, r1h_m=" << format_number(r.phase_r1h_m)
        << " a=" << format_number(r.phase_amplitude) << ")\n"
        << "  best_quantized_snr_db=" << format_number(linear_to_db(r.phase_best_snr))
        << " cophased_snr_db=" << format_number(linear_to_db(r.phase_cophased_snr))
        << " ratio=" << format_number(r.phase_best_snr / r.phase_cophased_snr)
        << " floor=" << format_number(r.phase_floor_ratio) << '\n'
        << "  " << verdict(r.phase_pass) << '\n';
}

}  // namespace risopt
