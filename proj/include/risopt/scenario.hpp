#ifndef RISOPT_SCENARIO_HPP
#define RISOPT_SCENARIO_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace risopt {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

/// Thrown for anything wrong with a configuration: missing or unknown keys,
/// unparsable values, and physical invariant violations. `key()` names the
/// offending entry (empty for file-level problems).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Consumption of the surface electronics. One control chip per reflective
/// unit plus a bank of rectifiers shared by groups of units.
struct PowerModel {
    double p_static_w = 0.0;
    double p_dynamic_w = 0.0;
    double reconfig_fraction = 0.0;  // share of time spent reconfiguring
    int n_rectifiers = 1;
    double p_rectifier_w = 0.0;
    std::optional<double> p_chip_w;  // direct per-chip override

    /// Average per-chip consumption. The override wins when present.
    double chip_power_w() const;
};

/// Total consumption of a surface with `element_count` units.
double ris_power_consumption(const PowerModel& model, std::size_t element_count);

/// One TX -> RIS -> RX deployment. All quantities SI.
struct Scenario {
    double carrier_frequency_hz = 0.0;
    double transmit_power_w = 0.0;
    double bandwidth_hz = 0.0;
    double noise_figure_db = 0.0;
    double tx_diameter_m = 0.0;
    double rx_diameter_m = 0.0;
    double tx_efficiency = 0.0;
    double rx_efficiency = 0.0;
    double tx_height_m = 0.0;
    double rx_height_m = 0.0;
    double ris_height_m = 0.0;
    double txrx_horizontal_m = 0.0;
    double lateral_offset_m = 0.0;
    int ris_rows = 0;
    int ris_cols = 0;
    double element_dx_m = 0.0;
    double element_dy_m = 0.0;
    double conversion_efficiency = 0.0;
    PowerModel power_model;

    double wavelength_m() const { return kSpeedOfLight / carrier_frequency_hz; }
    std::size_t element_count() const {
        return static_cast<std::size_t>(ris_rows) * static_cast<std::size_t>(ris_cols);
    }
    double tx_gain() const;
    double rx_gain() const;
    double noise_power_w() const;
    double ris_power_w() const { return ris_power_consumption(power_model, element_count()); }
};

/// Thermal noise floor, -174 dBm/Hz + 10 log10(W) + F, returned in watts.
double noise_power_w(double bandwidth_hz, double noise_figure_db);

/// Peak gain of a parabolic dish, e (pi D / lambda)^2.
double parabolic_gain(double diameter_m, double efficiency, double wavelength_m);

double dbm_to_w(double dbm);
double w_to_dbm(double watts);
double linear_to_db(double ratio);

/// Throws ConfigError naming the first field that breaks an invariant.
void validate(const Scenario& scenario);

/// Non-fatal remarks, e.g. dish diameters too small for the peak-gain formula.
std::vector<std::string> scenario_warnings(const Scenario& scenario);

// ---------------------------------------------------------------------------
// Flat `key = value` configuration files.

using KeyValueMap = std::map<std::string, std::string, std::less<>>;

/// Parses `key = value` lines; `#` starts a comment. Duplicate keys and lines
/// without `=` are errors.
KeyValueMap parse_key_values(std::string_view text, std::string_view source = "<config>");
KeyValueMap read_key_values(const std::filesystem::path& path);

/// Applies a single `KEY=VALUE` override on top of an existing map.
void apply_override(KeyValueMap& values, std::string_view assignment);

/// Builds and validates a Scenario. Every key must be known; every required
/// key must be present.
Scenario scenario_from_key_values(const KeyValueMap& values);

Scenario load_scenario(const std::filesystem::path& path,
                       const std::vector<std::string>& overrides = {});

/// Serializes with shortest round-trip number formatting, so reloading
/// reproduces every field bit-exactly.
std::string to_config_text(const Scenario& scenario);
KeyValueMap to_key_values(const Scenario& scenario);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);
double parse_number(std::string_view text, const std::string& key);

}  // namespace risopt

#endif
