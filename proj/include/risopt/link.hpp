#ifndef RISOPT_LINK_HPP
#define RISOPT_LINK_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "risopt/geometry.hpp"
#include "risopt/scenario.hpp"

namespace risopt {

/// Per-element reflection response, in ElementGrid order. Amplitudes are
/// accepted on the closed interval [0, 1]; phases are stored unwrapped.
struct ReflectionState {
    std::vector<double> amplitudes;
    std::vector<double> phases_rad;

    static ReflectionState uniform(std::size_t count, double amplitude, double phase_rad = 0.0);
};

struct LinkReport {
    double snr_linear = 0.0;
    double snr_db = 0.0;
    double p_harv_w = 0.0;
    std::optional<std::vector<double>> p_abs_per_element_w;
};

/// Gain pattern of one reflective unit, 4 cos(theta).
inline double element_gain(double theta_rad) { return 4.0 * std::cos(theta_rad); }

/// Received SNR from the explicit element sum. The complex sum is
/// accumulated with compensated summation over `partitions` contiguous
/// chunks reduced in fixed order, so results are reproducible for a given
/// partition count. Throws std::invalid_argument on a size mismatch.
double snr_explicit(double r1h_m, const ReflectionState& reflection, const Scenario& scenario,
                    int partitions = 1);

/// The complex array sum alone, sum A exp(-j(phi + 2 pi (r1 + r2) / lambda)).
std::complex<double> array_sum(double r1h_m, const ReflectionState& reflection, const Scenario& scenario,
                               int partitions = 1);

/// SNR with every element co-phased at the receiver and a common amplitude.
double snr_cophased(double r1h_m, double uniform_amplitude, const Scenario& scenario);

/// Power impinging on one element, using the center distance and incidence
/// angle for every element (far-field collapse).
double incident_power_element(double r1h_m, const Scenario& scenario);

/// (1 - A^2) of the incident power.
double absorbed_power_element(double amplitude, double r1h_m, const Scenario& scenario);

/// Conversion efficiency times the absorbed power summed over all elements.
double harvested_power(double r1h_m, std::span<const double> amplitudes, const Scenario& scenario);

/// Closed form of harvested_power for a common amplitude.
double harvested_power_uniform(double r1h_m, double uniform_amplitude, const Scenario& scenario);

LinkReport evaluate_link(double r1h_m, const ReflectionState& reflection, const Scenario& scenario,
                         bool per_element = false);

}  // namespace risopt

#endif
