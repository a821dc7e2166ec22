#include "risopt/link.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "risopt/summation.hpp"

namespace risopt {

namespace {

void check_size(std::size_t got, const Scenario& s, const char* what) {
    if (got != s.element_count())
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(got) + " entries, surface has " +
                                    std::to_string(s.element_count()) + " elements");
}

// (lambda / 4 pi)^2
double path_gain_factor(const Scenario& s) {
    const double k = s.wavelength_m() / (4.0 * kPi);
    return k * k;
}

}  // namespace

ReflectionState ReflectionState::uniform(std::size_t count, double amplitude, double phase_rad) {
    return {std::vector<double>(count, amplitude), std::vector<double>(count, phase_rad)};
}

std::complex<double> array_sum(double r1h_m, const ReflectionState& reflection, const Scenario& s, int partitions) {
    check_size(reflection.amplitudes.size(), s, "amplitude array");
    check_size(reflection.phases_rad.size(), s, "phase array");

    const ElementGrid grid = element_offsets(s);
    const auto distances = element_distances(r1h_m, grid, s);
    const double lambda = s.wavelength_m();
    const std::size_t n = distances.size();

    auto accumulate = [&](std::size_t begin, std::size_t end) {
        CompensatedComplexSum acc;
        for (std::size_t k = begin; k < end; ++k) {
            const double arg = reflection.phases_rad[k] + path_phase_rad(distances[k], lambda);
            acc.add(reflection.amplitudes[k] * std::complex<double>(std::cos(arg), -std::sin(arg)));
        }
        return acc;
    };

    const std::size_t parts = std::clamp<std::size_t>(partitions < 1 ? 1 : partitions, 1, n);
    if (parts == 1) return accumulate(0, n).value();

    std::vector<CompensatedComplexSum> partial(parts);
    {
        std::vector<std::jthread> workers;
        workers.reserve(parts);
        for (std::size_t i = 0; i < parts; ++i) {
            const std::size_t begin = n * i / parts;
            const std::size_t end = n * (i + 1) / parts;
            workers.emplace_back([&, i, begin, end] { partial[i] = accumulate(begin, end); });
        }
    }
    CompensatedComplexSum total;
    for (const auto& p : partial) total.add(p);
    return total.value();
}

double snr_explicit(double r1h_m, const ReflectionState& reflection, const Scenario& s, int partitions) {
    const LinkGeometry g = link_geometry(r1h_m, s);
    const double k2 = path_gain_factor(s);
    const double scale = k2 * k2 * s.transmit_power_w * s.tx_gain() * s.rx_gain() * element_gain(g.theta_i_rad) *
                         element_gain(g.theta_r_rad) / (g.r1_m * g.r1_m * g.r2_m * g.r2_m * s.noise_power_w());
    return scale * std::norm(array_sum(r1h_m, reflection, s, partitions));
}

double snr_cophased(double r1h_m, double a, const Scenario& s) {
    const LinkGeometry g = link_geometry(r1h_m, s);
    const double k2 = path_gain_factor(s);
    const double m = static_cast<double>(s.element_count());
    return 16.0 * s.transmit_power_w * s.tx_gain() * s.rx_gain() * k2 * k2 * m * m * a * a *
           std::cos(g.theta_i_rad) * std::cos(g.theta_r_rad) /
           (g.r1_m * g.r1_m * g.r2_m * g.r2_m * s.noise_power_w());
}

double incident_power_element(double r1h_m, const Scenario& s) {
    const auto [r1, r2] = center_distances(r1h_m, s);
    return path_gain_factor(s) * s.transmit_power_w * s.tx_gain() * element_gain(incidence_angle(r1h_m, s)) /
           (r1 * r1);
}

double absorbed_power_element(double a, double r1h_m, const Scenario& s) {
    return (1.0 - a) * (1.0 + a) * incident_power_element(r1h_m, s);
}

double harvested_power(double r1h_m, std::span<const double> amplitudes, const Scenario& s) {
    check_size(amplitudes.size(), s, "amplitude array");
    const double incident = incident_power_element(r1h_m, s);
    CompensatedSum absorbed;
    for (const double a : amplitudes) absorbed.add((1.0 - a) * (1.0 + a) * incident);
    return s.conversion_efficiency * absorbed.value();
}

double harvested_power_uniform(double r1h_m, double a, const Scenario& s) {
    const auto [r1, r2] = center_distances(r1h_m, s);
    const double m = static_cast<double>(s.element_count());
    return 4.0 * s.conversion_efficiency * path_gain_factor(s) * s.transmit_power_w * s.tx_gain() * m *
           (1.0 - a) * (1.0 + a) * std::cos(incidence_angle(r1h_m, s)) / (r1 * r1);
}

LinkReport evaluate_link(double r1h_m, const ReflectionState& reflection, const Scenario& s, bool per_element) {
    LinkReport report;
    report.snr_linear = snr_explicit(r1h_m, reflection, s);
    report.snr_db = linear_to_db(report.snr_linear);
    report.p_harv_w = harvested_power(r1h_m, reflection.amplitudes, s);
    if (per_element) {
        std::vector<double> p_abs;
        p_abs.reserve(reflection.amplitudes.size());
        for (const double a : reflection.amplitudes) p_abs.push_back(absorbed_power_element(a, r1h_m, s));
        report.p_abs_per_element_w = std::move(p_abs);
    }
    return report;
}

}  // namespace risopt
