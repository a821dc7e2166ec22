#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "risopt/scenario.hpp"
#include "test_support.hpp"

using namespace risopt;
using risopt::testing::data_path;
using risopt::testing::table1;

namespace {

KeyValueMap table1_values() { return read_key_values(data_path("table1.cfg")); }

std::string error_key(const KeyValueMap& values) {
    try {
        scenario_from_key_values(values);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

}  // namespace

TEST(LoadScenario, TableOne) {
    const Scenario s = table1();
    EXPECT_EQ(s.carrier_frequency_hz, 28e9);
    EXPECT_EQ(s.element_count(), 2500u);
    EXPECT_EQ(s.transmit_power_w, 1.0);
    EXPECT_EQ(s.power_model.n_rectifiers, 100);
    // Spacing defaults to half a wavelength.
    EXPECT_DOUBLE_EQ(s.element_dx_m, kSpeedOfLight / 28e9 / 2);
    EXPECT_DOUBLE_EQ(s.element_dy_m, kSpeedOfLight / 28e9 / 2);
    EXPECT_TRUE(scenario_warnings(s).empty());
}

TEST(LoadScenario, ZeroLateralOffsetNamesKey) {
    auto values = table1_values();
    values["lateral_offset_m"] = "0";
    EXPECT_EQ(error_key(values), "lateral_offset_m");
}

TEST(LoadScenario, MissingTransmitPower) {
    auto values = table1_values();
    values.erase("transmit_power_w");
    try {
        scenario_from_key_values(values);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "transmit_power_w");
        EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos);
    }
}

TEST(LoadScenario, RejectsUnknownAndMalformedEntries) {
    auto values = table1_values();
    values["transmit_power"] = "1";
    EXPECT_EQ(error_key(values), "transmit_power");

    values = table1_values();
    values["bandwidth_hz"] = "2 GHz";
    EXPECT_EQ(error_key(values), "bandwidth_hz");

    values = table1_values();
    values["ris_rows"] = "50.5";
    EXPECT_EQ(error_key(values), "ris_rows");

    values = table1_values();
    values["conversion_efficiency"] = "1";
    EXPECT_EQ(error_key(values), "conversion_efficiency");

    values = table1_values();
    values["reconfig_fraction"] = "1.5";
    EXPECT_EQ(error_key(values), "reconfig_fraction");

    values = table1_values();
    values["p_chip_w"] = "-1e-6";
    EXPECT_EQ(error_key(values), "p_chip_w");

    EXPECT_THROW(parse_key_values("a = 1\na = 2\n"), ConfigError);
    EXPECT_THROW(parse_key_values("no equals sign\n"), ConfigError);
    EXPECT_THROW(load_scenario("/nonexistent/file.cfg"), ConfigError);
}

TEST(LoadScenario, CommentsAndOverrides) {
    const auto kv = parse_key_values("# header\n  a = 1  # trailing\n\nb=2\n");
    ASSERT_EQ(kv.size(), 2u);
    EXPECT_EQ(kv.at("a"), "1");
    EXPECT_EQ(kv.at("b"), "2");

    const Scenario s = load_scenario(data_path("table1.cfg"), {"p_chip_w=0", "lateral_offset_m = 20"});
    EXPECT_EQ(*s.power_model.p_chip_w, 0.0);
    EXPECT_EQ(s.lateral_offset_m, 20.0);

    KeyValueMap m;
    EXPECT_THROW(apply_override(m, "no_value"), ConfigError);
    EXPECT_THROW(apply_override(m, "=3"), ConfigError);
}

TEST(LoadScenario, SmallDishWarns) {
    Scenario s = table1();
    s.tx_diameter_m = 0.05;  // under 5 wavelengths at 28 GHz
    validate(s);
    const auto w = scenario_warnings(s);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_NE(w[0].find("tx_diameter_m"), std::string::npos);
}

TEST(NoisePower, FloorAndTableOne) {
    EXPECT_NEAR(noise_power_w(1.0, 0.0) / 3.981071705534972e-21, 1.0, 1e-12);
    EXPECT_NEAR(w_to_dbm(noise_power_w(1.0, 0.0)), -174.0, 1e-9);

    // -174 + 10 log10(2e9) + 10 = -70.9897 dBm
    const double sigma2 = noise_power_w(2e9, 10.0);
    EXPECT_NEAR(w_to_dbm(sigma2), -70.98970004336019, 1e-9);
    EXPECT_NEAR(sigma2 / 7.962143411069939e-11, 1.0, 1e-12);

    // +3 dB is a factor 10^0.3, within a quarter percent of doubling.
    const double ratio = noise_power_w(2e9, 13.0) / sigma2;
    EXPECT_NEAR(ratio, std::pow(10.0, 0.3), 1e-12);
    EXPECT_NEAR(ratio, 2.0, 0.005);
}

TEST(NoisePower, StrictlyIncreasing) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_bw(0.0, 11.0), nf(-5.0, 20.0), bump(1e-6, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double w = std::pow(10.0, log_bw(rng));
        const double f = nf(rng);
        const double d = bump(rng);
        EXPECT_LT(noise_power_w(w, f), noise_power_w(w * (1 + d), f));
        EXPECT_LT(noise_power_w(w, f), noise_power_w(w, f + d));
    }
}

TEST(ParabolicGain, Examples) {
    const double lambda = kSpeedOfLight / 28e9;
    EXPECT_NEAR(parabolic_gain(lambda / kPi, 1.0, lambda), 1.0, 1e-14);

    const double g = parabolic_gain(0.3, 0.7, lambda);
    EXPECT_NEAR(g, 5423.940936437753, 1e-9);
    EXPECT_NEAR(linear_to_db(g), 37.34, 0.01);

    EXPECT_DOUBLE_EQ(parabolic_gain(0.6, 0.7, lambda), 4.0 * g);
}

TEST(RisPowerConsumption, Examples) {
    PowerModel zero;
    zero.p_chip_w = 0.0;
    EXPECT_EQ(ris_power_consumption(zero, 2500), 0.0);

    PowerModel chip;
    chip.p_chip_w = 1e-6;
    chip.n_rectifiers = 100;
    chip.p_rectifier_w = 0.0;
    EXPECT_NEAR(ris_power_consumption(chip, 2500), 2.5e-3, 1e-18);

    PowerModel split;
    split.p_static_w = 0.2e-6;
    split.p_dynamic_w = 8e-6;
    split.reconfig_fraction = 0.1;
    EXPECT_NEAR(split.chip_power_w(), 1e-6, 1e-20);
    EXPECT_NEAR(ris_power_consumption(split, 2500), 2.5e-3, 1e-15);

    // The override wins over the static/dynamic average.
    split.p_chip_w = 3e-6;
    EXPECT_EQ(split.chip_power_w(), 3e-6);
}

TEST(RisPowerConsumption, LinearInElementsAndRectifiers) {
    PowerModel m;
    m.p_chip_w = 1.3e-6;
    m.p_rectifier_w = 2.1e-5;
    m.n_rectifiers = 10;
    const double base = ris_power_consumption(m, 100);
    const double per_element = ris_power_consumption(m, 101) - base;
    EXPECT_NEAR(ris_power_consumption(m, 400) - base, 300 * per_element, 1e-15);

    PowerModel m2 = m;
    m2.n_rectifiers = 40;
    EXPECT_NEAR(ris_power_consumption(m2, 100) - base, 30 * m.p_rectifier_w, 1e-15);
}

TEST(ConfigText, RoundTripIsBitExact) {
    std::mt19937_64 rng(2024);
    auto real = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    for (int i = 0; i < 200; ++i) {
        Scenario s = table1();
        s.carrier_frequency_hz = real(1e9, 1e11);
        s.transmit_power_w = real(1e-3, 10);
        s.bandwidth_hz = real(1e6, 5e9);
        s.noise_figure_db = real(-3, 15);
        s.tx_diameter_m = real(0.05, 2);
        s.rx_diameter_m = real(0.05, 2);
        s.tx_efficiency = real(0.1, 1);
        s.rx_efficiency = real(0.1, 1);
        s.tx_height_m = real(0.5, 30);
        s.rx_height_m = real(0.5, 30);
        s.ris_height_m = real(0.5, 30);
        s.txrx_horizontal_m = real(1, 500);
        s.lateral_offset_m = real(0.1, 50);
        s.ris_rows = 1 + static_cast<int>(rng() % 80);
        s.ris_cols = 1 + static_cast<int>(rng() % 80);
        s.element_dx_m = real(1e-4, 0.1);
        s.element_dy_m = real(1e-4, 0.1);
        s.conversion_efficiency = real(0.01, 0.99);
        s.power_model.p_static_w = real(0, 1e-5);
        s.power_model.p_dynamic_w = real(0, 1e-4);
        s.power_model.reconfig_fraction = real(0, 1);
        s.power_model.n_rectifiers = 1 + static_cast<int>(rng() % 500);
        s.power_model.p_rectifier_w = real(0, 1e-4);
        if (i % 2) s.power_model.p_chip_w = real(0, 1e-4);
        else s.power_model.p_chip_w.reset();

        const Scenario back = scenario_from_key_values(parse_key_values(to_config_text(s)));
        EXPECT_EQ(to_key_values(back), to_key_values(s));
        EXPECT_EQ(std::memcmp(&back.carrier_frequency_hz, &s.carrier_frequency_hz, sizeof(double)), 0);
        EXPECT_EQ(back.lateral_offset_m, s.lateral_offset_m);
        EXPECT_EQ(back.element_dy_m, s.element_dy_m);
        EXPECT_EQ(back.power_model.p_chip_w, s.power_model.p_chip_w);
        EXPECT_EQ(back.power_model.reconfig_fraction, s.power_model.reconfig_fraction);
    }
}
