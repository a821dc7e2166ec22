#ifndef RISOPT_CLI_HPP
#define RISOPT_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "risopt/optimizer.hpp"
#include "risopt/scenario.hpp"

namespace risopt::cli {

enum ExitCode : int {
    kOk = 0,           // feasible / validation passed
    kUsage = 1,        // bad flags or unwritable output
    kInfeasible = 2,
    kConfigError = 3,
    kValidationFailed = 4,
};

/// Mounted sites from a `site.N.<key> = value` file. Every site needs
/// r1h_m, lateral_offset_m and ris_height_m; indices must run 0..N-1.
std::vector<SiteCandidate> parse_sites(const KeyValueMap& values, const Scenario& base);
std::vector<SiteCandidate> load_sites(const std::filesystem::path& path, const Scenario& base);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace risopt::cli

#endif
