#include "risopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "risopt/geometry.hpp"
#include "risopt/link.hpp"

namespace risopt {

namespace {

// cos(theta_i) cos(theta_r) / (r1^2 r2^2 sigma^2)
double geometric_snr_term(double r1h_m, const Scenario& s) {
    const LinkGeometry g = link_geometry(r1h_m, s);
    return std::cos(g.theta_i_rad) * std::cos(g.theta_r_rad) /
           (g.r1_m * g.r1_m * g.r2_m * g.r2_m * s.noise_power_w());
}

double lambda_over_4pi_squared(const Scenario& s) {
    const double k = s.wavelength_m() / (4.0 * kPi);
    return k * k;
}

}  // namespace

double snr_factor(double r1h_m, const Scenario& s) {
    const double k2 = lambda_over_4pi_squared(s);
    return 16.0 * s.transmit_power_w * s.tx_gain() * s.rx_gain() * k2 * k2 * geometric_snr_term(r1h_m, s);
}

double harvest_factor(double r1h_m, const Scenario& s) {
    const LinkGeometry g = link_geometry(r1h_m, s);
    return 4.0 * s.conversion_efficiency * lambda_over_4pi_squared(s) * s.transmit_power_w * s.tx_gain() *
           std::cos(g.theta_i_rad) / (g.r1_m * g.r1_m);
}

double amplitude_radicand(double r1h_m, double p_ris_w, const Scenario& s) {
    const double ceiling = static_cast<double>(s.element_count()) * harvest_factor(r1h_m, s);
    return 1.0 - p_ris_w / ceiling;
}

std::vector<double> optimal_phases(double r1h_m, const Scenario& s) {
    const auto distances = element_distances(r1h_m, element_offsets(s), s);
    const double lambda = s.wavelength_m();
    std::vector<double> phases;
    phases.reserve(distances.size());
    for (const auto& d : distances) phases.push_back(-path_phase_rad(d, lambda));
    return phases;
}

AmplitudeSolution optimal_amplitude(double r1h_m, double p_ris_w, const Scenario& s) {
    if (p_ris_w < 0) throw std::invalid_argument("RIS power consumption must be non-negative");
    if (p_ris_w == 0) return {AmplitudeStatus::reflection_boundary, 1.0};

    const double radicand = amplitude_radicand(r1h_m, p_ris_w, s);
    if (radicand < 0) return {AmplitudeStatus::infeasible, 0.0};
    if (radicand == 0) return {AmplitudeStatus::absorption_boundary, 0.0};
    const double a = std::sqrt(radicand);
    // Consumption below the last bit of 1 - A^2.
    if (a >= 1.0) return {AmplitudeStatus::reflection_boundary, 1.0};
    return {AmplitudeStatus::interior, a};
}

double placement_objective(double r1h_m, double p_ris_w, const Scenario& s) {
    return geometric_snr_term(r1h_m, s) * amplitude_radicand(r1h_m, p_ris_w, s);
}

void validate(const SearchConfig& search, const Scenario& s) {
    const double hi = search.max_for(s);
    if (!std::isfinite(search.r1h_min_m) || !std::isfinite(hi) || !(search.r1h_min_m < hi))
        throw std::invalid_argument("search bounds need r1h_min < r1h_max");
    if (!(search.coarse_step_m > 0) || !std::isfinite(search.coarse_step_m))
        throw std::invalid_argument("coarse step must be positive");
    if (search.refine_iterations < 0) throw std::invalid_argument("refine iterations must be non-negative");
    if (!(search.refine_tolerance_m > 0)) throw std::invalid_argument("refine tolerance must be positive");
    if (search.refine_bracket_m && !(*search.refine_bracket_m > 0))
        throw std::invalid_argument("refine bracket must be positive");
}

Bracket golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, int max_iterations,
                                double tolerance) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iterations && hi - lo > tolerance; ++i) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return {lo, hi};
}

PlacementSolution evaluate_placement(double r1h_m, double p_ris_w, const Scenario& s) {
    PlacementSolution solution;
    solution.p_ris_w = p_ris_w;

    const AmplitudeSolution amp = optimal_amplitude(r1h_m, p_ris_w, s);
    if (!amp.usable()) return solution;

    PlacementOptimum opt;
    opt.r1h_m = r1h_m;
    opt.amplitude = amp.amplitude;
    opt.amplitude_status = amp.status;
    opt.phases_rad = optimal_phases(r1h_m, s);
    opt.objective = placement_objective(r1h_m, p_ris_w, s);
    opt.snr_linear = snr_cophased(r1h_m, amp.amplitude, s);
    opt.snr_db = linear_to_db(opt.snr_linear);
    opt.p_harv_w = harvested_power_uniform(r1h_m, amp.amplitude, s);
    solution.optimum = std::move(opt);
    return solution;
}

PlacementSolution solve_placement(const Scenario& s, const SearchConfig& search) {
    validate(search, s);
    const double lo = search.r1h_min_m;
    const double hi = search.max_for(s);
    const double step = search.coarse_step_m;
    const double p_ris = s.ris_power_w();

    std::vector<double> grid;
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    grid.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) grid.push_back(std::min(hi, lo + static_cast<double>(i) * step));
    if (hi - grid.back() > 1e-9 * step) grid.push_back(hi);

    std::vector<ObjectiveSample> trace;
    if (search.keep_trace) trace.reserve(grid.size());
    std::optional<std::size_t> best;
    double best_objective = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const bool feasible = amplitude_radicand(r, p_ris, s) > 0;
        const double objective = placement_objective(r, p_ris, s);
        if (search.keep_trace) trace.push_back({r, objective, feasible});
        // Strict comparison: the lowest r1h wins exact ties.
        if (feasible && (!best || objective > best_objective)) {
            best = i;
            best_objective = objective;
        }
    }

    if (!best) {
        PlacementSolution none;
        none.p_ris_w = p_ris;
        none.objective_curve = std::move(trace);
        return none;
    }

    double r_opt = grid[*best];
    const double half = search.refine_bracket_m.value_or(step);
    const Bracket bracket = golden_section_maximize(
        [&](double r) { return placement_objective(r, p_ris, s); }, std::max(lo, r_opt - half),
        std::min(hi, r_opt + half), search.refine_iterations, search.refine_tolerance_m);
    const double r_ref = bracket.mid();
    if (amplitude_radicand(r_ref, p_ris, s) > 0 && placement_objective(r_ref, p_ris, s) >= best_objective)
        r_opt = r_ref;

    PlacementSolution solution = evaluate_placement(r_opt, p_ris, s);
    solution.objective_curve = std::move(trace);
    solution.refine_bracket_width_m = bracket.width();
    return solution;
}

SiteSelection select_site(const std::vector<SiteCandidate>& candidates, double p_ris_w) {
    if (candidates.empty()) throw std::invalid_argument("site selection needs at least one candidate");
    SiteSelection out;
    out.candidates.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        out.candidates.push_back(evaluate_placement(candidates[i].r1h_m, p_ris_w, candidates[i].scenario));
        const auto& opt = out.candidates.back().optimum;
        if (opt && (!out.selected || opt->snr_linear > out.candidates[*out.selected].optimum->snr_linear))
            out.selected = i;
    }
    return out;
}

}  // namespace risopt
