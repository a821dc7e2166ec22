#ifndef RISOPT_TEST_SUPPORT_HPP
#define RISOPT_TEST_SUPPORT_HPP

#include <cmath>
#include <string>

#include "risopt/scenario.hpp"

namespace risopt::testing {

inline std::string data_path(const std::string& name) { return std::string(RISOPT_TEST_DATA) + "/" + name; }

inline Scenario table1() { return load_scenario(data_path("table1.cfg")); }

inline Scenario table1_with(double p_chip_w, double lateral_offset_m = 5.0) {
    Scenario s = table1();
    s.power_model.p_chip_w = p_chip_w;
    s.lateral_offset_m = lateral_offset_m;
    return s;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace risopt::testing

#endif
