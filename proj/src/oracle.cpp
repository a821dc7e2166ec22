#include "risopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "risopt/link.hpp"

namespace risopt::oracle {

namespace {

std::vector<double> lattice(double lo, double hi, double step) {
    std::vector<double> out;
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    out.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) out.push_back(std::min(hi, lo + static_cast<double>(i) * step));
    if (hi - out.back() > 1e-9 * step) out.push_back(hi);
    return out;
}

}  // namespace

OracleResult brute_force_solve(const Scenario& s, const LatticeSpec& spec) {
    if (!(spec.r1h_step_m > 0) || !(spec.a_step > 0) || spec.a_step > 1)
        throw std::invalid_argument("oracle lattice steps must be positive");
    const double hi = spec.r1h_max_m.value_or(s.txrx_horizontal_m);
    if (!(spec.r1h_min_m < hi)) throw std::invalid_argument("oracle lattice needs r1h_min < r1h_max");

    const double p_ris = s.ris_power_w();
    const auto r_axis = lattice(spec.r1h_min_m, hi, spec.r1h_step_m);
    const auto a_axis = lattice(0.0, 1.0, spec.a_step);

    OracleResult best;
    best.p_ris_w = p_ris;
    best.r1h_step_m = spec.r1h_step_m;
    best.a_step = spec.a_step;

    for (const double r : r_axis) {
        // The constraint surface must cross this column somewhere in [0, 1].
        if (harvested_power_uniform(r, 0.0, s) < p_ris) continue;
        ++best.columns_feasible;

        double a_kept = 0.0;
        double mismatch_kept = std::numeric_limits<double>::infinity();
        double harv_kept = 0.0;
        for (const double a : a_axis) {
            const double harv = harvested_power_uniform(r, a, s);
            const double mismatch = std::abs(harv - p_ris);
            if (mismatch < mismatch_kept) {
                mismatch_kept = mismatch;
                a_kept = a;
                harv_kept = harv;
            }
        }

        const double snr = snr_cophased(r, a_kept, s);
        if (!best.feasible || snr > best.snr_linear) {
            best.feasible = true;
            best.r1h_m = r;
            best.amplitude = a_kept;
            best.snr_linear = snr;
            best.p_harv_w = harv_kept;
        }
    }

    if (best.feasible) {
        best.snr_db = linear_to_db(best.snr_linear);
        best.snr_slack_linear = best.amplitude > 0 ? 2.0 * spec.a_step * best.snr_linear / best.amplitude : 0.0;
    }
    return best;
}

PhaseSearchResult exhaustive_phase_search(const Scenario& s, double r1h_m, int phase_levels,
                                          double uniform_amplitude) {
    const std::size_t m = s.element_count();
    if (phase_levels < 1) throw std::invalid_argument("phase_levels must be at least 1");
    if (m > kMaxEnumeratedElements)
        throw std::invalid_argument("exhaustive phase search is limited to " +
                                    std::to_string(kMaxEnumeratedElements) + " elements");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= static_cast<std::uint64_t>(phase_levels);
        if (total > kMaxEnumeratedProfiles)
            throw std::invalid_argument("exhaustive phase search would exceed 1e8 profiles");
    }

    const double step = 2.0 * kPi / phase_levels;
    ReflectionState state = ReflectionState::uniform(m, uniform_amplitude, 0.0);
    std::vector<int> digits(m, 0);

    PhaseSearchResult best;
    best.phases_rad = state.phases_rad;
    best.snr_linear = -1.0;
    for (std::uint64_t k = 0; k < total; ++k) {
        for (std::size_t i = 0; i < m; ++i) state.phases_rad[i] = step * digits[i];
        const double snr = snr_explicit(r1h_m, state, s);
        if (snr > best.snr_linear) {
            best.snr_linear = snr;
            best.phases_rad = state.phases_rad;
        }
        // Odometer increment, last element fastest.
        for (std::size_t i = m; i-- > 0;) {
            if (++digits[i] < phase_levels) break;
            digits[i] = 0;
        }
    }
    best.profiles_evaluated = total;
    return best;
}

Scenario shrink_surface(const Scenario& s, int rows, int cols) {
    Scenario out = s;
    out.ris_rows = rows;
    out.ris_cols = cols;
    validate(out);
    return out;
}

}  // namespace risopt::oracle
