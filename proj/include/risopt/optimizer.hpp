#ifndef RISOPT_OPTIMIZER_HPP
#define RISOPT_OPTIMIZER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "risopt/scenario.hpp"

namespace risopt {

// Closed-form solution of the autonomy-constrained placement problem.
//
// With co-phased elements the SNR is F(r1h) (sum A)^2 and the harvest is
// H(r1h) sum (1 - A^2). Stationarity of the Lagrangian forces a common
// amplitude, and the equality constraint then fixes it:
//
//     A*(r1h)^2 = 1 - P_RIS / (M_s H(r1h)).
//
// Substituting back leaves a one-dimensional objective G(r1h) that is
// maximized by a coarse scan plus golden-section refinement. The multiplier
// itself never needs to be formed.

/// F(r1h): SNR per unit squared amplitude sum, 16 P_t G_t G_r (lambda/4pi)^4
/// cos(theta_i) cos(theta_r) / (r1^2 r2^2 sigma^2).
double snr_factor(double r1h_m, const Scenario& scenario);

/// H(r1h): harvested watts per unit of (1 - A^2) on one element.
double harvest_factor(double r1h_m, const Scenario& scenario);

/// 1 - P_RIS / (M_s H(r1h)); the squared optimal amplitude where positive.
double amplitude_radicand(double r1h_m, double p_ris_w, const Scenario& scenario);

/// Co-phasing rule phi* = -2 pi (r1pl + r2pl) / lambda, in grid order.
std::vector<double> optimal_phases(double r1h_m, const Scenario& scenario);

enum class AmplitudeStatus {
    interior,            // 0 < A* < 1
    reflection_boundary, // P_RIS == 0, A* == 1: everything is reflected
    absorption_boundary, // radicand == 0, A* == 0: everything is absorbed
    infeasible,          // harvest cannot cover consumption here
};

struct AmplitudeSolution {
    AmplitudeStatus status = AmplitudeStatus::infeasible;
    double amplitude = 0.0;  // meaningful unless infeasible

    /// True where the placement can sustain itself and still reflect power.
    bool usable() const {
        return status == AmplitudeStatus::interior || status == AmplitudeStatus::reflection_boundary;
    }
};

AmplitudeSolution optimal_amplitude(double r1h_m, double p_ris_w, const Scenario& scenario);

/// G(r1h) = cos(theta_i) cos(theta_r) / (r1^2 r2^2 sigma^2) * radicand.
/// Negative where the placement is infeasible.
double placement_objective(double r1h_m, double p_ris_w, const Scenario& scenario);

struct SearchConfig {
    double r1h_min_m = 0.0;
    std::optional<double> r1h_max_m;        // defaults to the TX-RX span
    double coarse_step_m = 0.1;
    int refine_iterations = 40;             // golden-section iteration cap
    double refine_tolerance_m = 1e-4;       // stop once the bracket is this narrow
    std::optional<double> refine_bracket_m; // half-width, defaults to one coarse step
    bool keep_trace = false;

    double max_for(const Scenario& scenario) const {
        return r1h_max_m.value_or(scenario.txrx_horizontal_m);
    }
};

/// Throws std::invalid_argument unless min < max, step > 0 and the
/// refinement settings are positive.
void validate(const SearchConfig& search, const Scenario& scenario);

struct ObjectiveSample {
    double r1h_m = 0.0;
    double objective = 0.0;
    bool feasible = false;
};

struct PlacementOptimum {
    double r1h_m = 0.0;
    double amplitude = 0.0;
    AmplitudeStatus amplitude_status = AmplitudeStatus::interior;
    std::vector<double> phases_rad;
    double objective = 0.0;
    double snr_linear = 0.0;
    double snr_db = 0.0;
    double p_harv_w = 0.0;
};

struct PlacementSolution {
    double p_ris_w = 0.0;
    std::optional<PlacementOptimum> optimum;     // empty when infeasible
    std::vector<ObjectiveSample> objective_curve; // coarse scan, if requested
    double refine_bracket_width_m = 0.0;

    bool feasible() const { return optimum.has_value(); }
};

/// Maximizes `f` over [lo, hi] by golden-section search; returns the final
/// bracket. Assumes `f` is unimodal on the interval.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
};
Bracket golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, int max_iterations,
                                double tolerance);

/// Evaluates the optimum at a fixed placement. Empty optimum if infeasible.
PlacementSolution evaluate_placement(double r1h_m, double p_ris_w, const Scenario& scenario);

/// Full solve: phases, amplitude and placement.
PlacementSolution solve_placement(const Scenario& scenario, const SearchConfig& search = {});

/// A mounted surface that cannot move: its own geometry plus a fixed r1h.
struct SiteCandidate {
    Scenario scenario;
    double r1h_m = 0.0;
};

struct SiteSelection {
    std::optional<std::size_t> selected;
    std::vector<PlacementSolution> candidates;
};

/// Picks the feasible site with the highest SNR; ties go to the lowest index.
/// Throws std::invalid_argument on an empty list.
SiteSelection select_site(const std::vector<SiteCandidate>& candidates, double p_ris_w);

}  // namespace risopt

#endif
