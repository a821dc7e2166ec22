#include "risopt/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace risopt {

namespace {

struct RealField {
    std::string_view key;
    double Scenario::*member;
};

struct PowerRealField {
    std::string_view key;
    double PowerModel::*member;
};

constexpr std::array kRequiredReals{
    RealField{"carrier_frequency_hz", &Scenario::carrier_frequency_hz},
    RealField{"transmit_power_w", &Scenario::transmit_power_w},
    RealField{"bandwidth_hz", &Scenario::bandwidth_hz},
    RealField{"noise_figure_db", &Scenario::noise_figure_db},
    RealField{"tx_diameter_m", &Scenario::tx_diameter_m},
    RealField{"rx_diameter_m", &Scenario::rx_diameter_m},
    RealField{"tx_efficiency", &Scenario::tx_efficiency},
    RealField{"rx_efficiency", &Scenario::rx_efficiency},
    RealField{"tx_height_m", &Scenario::tx_height_m},
    RealField{"rx_height_m", &Scenario::rx_height_m},
    RealField{"ris_height_m", &Scenario::ris_height_m},
    RealField{"txrx_horizontal_m", &Scenario::txrx_horizontal_m},
    RealField{"lateral_offset_m", &Scenario::lateral_offset_m},
    RealField{"conversion_efficiency", &Scenario::conversion_efficiency},
};

// Default to half a wavelength when omitted.
constexpr std::array kSpacingReals{
    RealField{"element_dx_m", &Scenario::element_dx_m},
    RealField{"element_dy_m", &Scenario::element_dy_m},
};

// Default to zero when omitted.
constexpr std::array kPowerReals{
    PowerRealField{"p_static_w", &PowerModel::p_static_w},
    PowerRealField{"p_dynamic_w", &PowerModel::p_dynamic_w},
    PowerRealField{"reconfig_fraction", &PowerModel::reconfig_fraction},
    PowerRealField{"p_rectifier_w", &PowerModel::p_rectifier_w},
};

constexpr std::string_view kChipOverrideKey = "p_chip_w";
constexpr std::array<std::string_view, 3> kIntegerKeys{"ris_rows", "ris_cols", "n_rectifiers"};

bool is_known_key(std::string_view key) {
    for (const auto& f : kRequiredReals)
        if (f.key == key) return true;
    for (const auto& f : kSpacingReals)
        if (f.key == key) return true;
    for (const auto& f : kPowerReals)
        if (f.key == key) return true;
    for (const auto k : kIntegerKeys)
        if (k == key) return true;
    return key == kChipOverrideKey;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

const std::string& require(const KeyValueMap& values, std::string_view key) {
    const auto it = values.find(key);
    if (it == values.end()) throw ConfigError(std::string(key), "missing required key");
    return it->second;
}

int parse_integer(std::string_view text, const std::string& key) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError(key, "expected an integer, got '" + std::string(text) + "'");
    return value;
}

void check(bool ok, std::string_view key, const char* what) {
    if (!ok) throw ConfigError(std::string(key), what);
}

}  // namespace

double PowerModel::chip_power_w() const {
    if (p_chip_w) return *p_chip_w;
    return p_static_w + reconfig_fraction * p_dynamic_w;
}

double ris_power_consumption(const PowerModel& model, std::size_t element_count) {
    return static_cast<double>(element_count) * model.chip_power_w() +
           static_cast<double>(model.n_rectifiers) * model.p_rectifier_w;
}

double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double w_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double noise_power_w(double bandwidth_hz, double noise_figure_db) {
    return dbm_to_w(-174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

double parabolic_gain(double diameter_m, double efficiency, double wavelength_m) {
    const double x = kPi * diameter_m / wavelength_m;
    return efficiency * x * x;
}

double Scenario::tx_gain() const { return parabolic_gain(tx_diameter_m, tx_efficiency, wavelength_m()); }
double Scenario::rx_gain() const { return parabolic_gain(rx_diameter_m, rx_efficiency, wavelength_m()); }
double Scenario::noise_power_w() const { return risopt::noise_power_w(bandwidth_hz, noise_figure_db); }

void validate(const Scenario& s) {
    for (const auto& f : kRequiredReals)
        check(std::isfinite(s.*f.member), f.key, "must be finite");
    for (const auto& f : kSpacingReals)
        check(std::isfinite(s.*f.member), f.key, "must be finite");

    check(s.carrier_frequency_hz > 0, "carrier_frequency_hz", "must be positive");
    check(s.transmit_power_w > 0, "transmit_power_w", "must be positive");
    check(s.bandwidth_hz > 0, "bandwidth_hz", "must be positive");
    check(s.tx_diameter_m > 0, "tx_diameter_m", "must be positive");
    check(s.rx_diameter_m > 0, "rx_diameter_m", "must be positive");
    check(s.tx_efficiency > 0 && s.tx_efficiency <= 1, "tx_efficiency", "must lie in (0, 1]");
    check(s.rx_efficiency > 0 && s.rx_efficiency <= 1, "rx_efficiency", "must lie in (0, 1]");
    check(s.tx_height_m > 0, "tx_height_m", "must be positive");
    check(s.rx_height_m > 0, "rx_height_m", "must be positive");
    check(s.ris_height_m > 0, "ris_height_m", "must be positive");
    check(s.txrx_horizontal_m > 0, "txrx_horizontal_m", "must be positive");
    check(s.lateral_offset_m > 0, "lateral_offset_m", "must be positive");
    check(s.ris_rows >= 1, "ris_rows", "must be at least 1");
    check(s.ris_cols >= 1, "ris_cols", "must be at least 1");
    check(s.element_dx_m > 0, "element_dx_m", "must be positive");
    check(s.element_dy_m > 0, "element_dy_m", "must be positive");
    check(s.conversion_efficiency > 0 && s.conversion_efficiency < 1, "conversion_efficiency",
          "must lie in (0, 1)");

    const PowerModel& pm = s.power_model;
    for (const auto& f : kPowerReals)
        check(std::isfinite(pm.*f.member) && pm.*f.member >= 0, f.key, "must be a finite non-negative number");
    check(pm.reconfig_fraction <= 1, "reconfig_fraction", "must lie in [0, 1]");
    check(pm.n_rectifiers >= 1, "n_rectifiers", "must be at least 1");
    if (pm.p_chip_w)
        check(std::isfinite(*pm.p_chip_w) && *pm.p_chip_w >= 0, kChipOverrideKey,
              "must be a finite non-negative number");
}

std::vector<std::string> scenario_warnings(const Scenario& s) {
    std::vector<std::string> out;
    const double lambda = s.wavelength_m();
    if (s.tx_diameter_m / lambda < 10)
        out.push_back("tx_diameter_m is below 10 wavelengths; the parabolic peak-gain formula is inaccurate");
    if (s.rx_diameter_m / lambda < 10)
        out.push_back("rx_diameter_m is below 10 wavelengths; the parabolic peak-gain formula is inaccurate");
    return out;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), ptr);
}

double parse_number(std::string_view text, const std::string& key) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ConfigError(key, "expected a number, got '" + std::string(text) + "'");
    return value;
}

KeyValueMap parse_key_values(std::string_view text, std::string_view source) {
    KeyValueMap out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        if (eq == std::string_view::npos) throw ConfigError("", where + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError("", where + ": empty key");
        if (value.empty()) throw ConfigError(key, where + ": empty value");
        if (!out.emplace(key, value).second) throw ConfigError(key, where + ": duplicate key");
    }
    return out;
}

KeyValueMap read_key_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_key_values(ss.str(), path.string());
}

void apply_override(KeyValueMap& values, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("", "override '" + std::string(assignment) + "' is not KEY=VALUE");
    const std::string key(trim(assignment.substr(0, eq)));
    const std::string value(trim(assignment.substr(eq + 1)));
    if (key.empty() || value.empty())
        throw ConfigError(key, "override '" + std::string(assignment) + "' is not KEY=VALUE");
    values[key] = value;
}

Scenario scenario_from_key_values(const KeyValueMap& values) {
    for (const auto& [key, _] : values)
        if (!is_known_key(key)) throw ConfigError(key, "unknown key");

    Scenario s;
    for (const auto& f : kRequiredReals) s.*f.member = parse_number(require(values, f.key), std::string(f.key));
    s.ris_rows = parse_integer(require(values, "ris_rows"), "ris_rows");
    s.ris_cols = parse_integer(require(values, "ris_cols"), "ris_cols");
    s.power_model.n_rectifiers = parse_integer(require(values, "n_rectifiers"), "n_rectifiers");

    check(s.carrier_frequency_hz > 0, "carrier_frequency_hz", "must be positive");
    for (const auto& f : kSpacingReals) {
        const auto it = values.find(f.key);
        s.*f.member = it == values.end() ? s.wavelength_m() / 2 : parse_number(it->second, std::string(f.key));
    }
    for (const auto& f : kPowerReals) {
        const auto it = values.find(f.key);
        if (it != values.end()) s.power_model.*f.member = parse_number(it->second, std::string(f.key));
    }
    if (const auto it = values.find(kChipOverrideKey); it != values.end())
        s.power_model.p_chip_w = parse_number(it->second, std::string(kChipOverrideKey));

    validate(s);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    KeyValueMap values = read_key_values(path);
    for (const auto& o : overrides) apply_override(values, o);
    return scenario_from_key_values(values);
}

KeyValueMap to_key_values(const Scenario& s) {
    KeyValueMap out;
    for (const auto& f : kRequiredReals) out.emplace(f.key, format_number(s.*f.member));
    for (const auto& f : kSpacingReals) out.emplace(f.key, format_number(s.*f.member));
    for (const auto& f : kPowerReals) out.emplace(f.key, format_number(s.power_model.*f.member));
    out.emplace("ris_rows", std::to_string(s.ris_rows));
    out.emplace("ris_cols", std::to_string(s.ris_cols));
    out.emplace("n_rectifiers", std::to_string(s.power_model.n_rectifiers));
    if (s.power_model.p_chip_w) out.emplace(kChipOverrideKey, format_number(*s.power_model.p_chip_w));
    return out;
}

std::string to_config_text(const Scenario& s) {
    std::string text;
    for (const auto& [key, value] : to_key_values(s)) text += key + " = " + value + "\n";
    return text;
}

}  // namespace risopt
