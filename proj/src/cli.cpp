#include "risopt/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include "risopt/link.hpp"
#include "risopt/sweep.hpp"
#include "risopt/validation.hpp"

namespace risopt::cli {

namespace {

constexpr std::string_view kSitePrefix = "site.";

const char* status_name(AmplitudeStatus s) {
    switch (s) {
        case AmplitudeStatus::interior: return "interior";
        case AmplitudeStatus::reflection_boundary: return "boundary (A = 1, full reflection)";
        case AmplitudeStatus::absorption_boundary: return "boundary (A = 0, full absorption)";
        case AmplitudeStatus::infeasible: return "infeasible";
    }
    return "unknown";
}

struct CommonOptions {
    std::string config;
    std::vector<std::string> overrides;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config, "Scenario file (key = value)")->required();
        cmd->add_option("--override", overrides, "KEY=VALUE applied on top of the config (repeatable)")
            ->allow_extra_args(false);
    }

    Scenario load(std::ostream& err) const {
        Scenario s = load_scenario(config, overrides);
        for (const auto& w : scenario_warnings(s)) err << "warning: " << w << '\n';
        return s;
    }
};

void print_solution(std::ostream& out, const Scenario& s, const PlacementSolution& sol) {
    out << "p_chip_w: " << format_number(s.power_model.chip_power_w()) << '\n'
        << "p_ris_w: " << format_number(sol.p_ris_w) << '\n'
        << "lateral_offset_m: " << format_number(s.lateral_offset_m) << '\n';
    if (!sol.optimum) {
        out << "feasible: no (harvest cannot cover consumption anywhere in the search range)\n";
        return;
    }
    const auto& o = *sol.optimum;
    out << "feasible: yes\n"
        << "r1h_opt_m: " << format_number(o.r1h_m) << '\n'
        << "a_opt: " << format_number(o.amplitude) << '\n'
        << "amplitude_status: " << status_name(o.amplitude_status) << '\n'
        << "snr_opt_linear: " << format_number(o.snr_linear) << '\n'
        << "snr_opt_db: " << format_number(o.snr_db) << '\n'
        << "p_harv_w: " << format_number(o.p_harv_w) << '\n';
    if (sol.p_ris_w > 0)
        out << "constraint_rel_error: " << format_number(std::abs(o.p_harv_w - sol.p_ris_w) / sol.p_ris_w) << '\n';
    out << "refine_bracket_m: " << format_number(sol.refine_bracket_width_m) << '\n';
}

bool open_output(std::ofstream& file, const std::string& path, std::ostream& err) {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

}  // namespace

std::vector<SiteCandidate> parse_sites(const KeyValueMap& values, const Scenario& base) {
    struct Partial {
        std::optional<double> r1h_m, lateral_offset_m, ris_height_m;
    };
    std::map<int, Partial> sites;

    for (const auto& [key, value] : values) {
        if (!key.starts_with(kSitePrefix)) throw ConfigError(key, "expected site.<index>.<field>");
        const std::string_view rest = std::string_view(key).substr(kSitePrefix.size());
        const auto dot = rest.find('.');
        if (dot == std::string_view::npos || dot == 0) throw ConfigError(key, "expected site.<index>.<field>");
        int index = -1;
        const auto idx_text = rest.substr(0, dot);
        const auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
        if (ec != std::errc{} || ptr != idx_text.data() + idx_text.size() || index < 0)
            throw ConfigError(key, "site index must be a non-negative integer");
        const std::string_view field = rest.substr(dot + 1);
        const double v = parse_number(value, key);

        Partial& site = sites[index];
        if (field == "r1h_m")
            site.r1h_m = v;
        else if (field == "lateral_offset_m")
            site.lateral_offset_m = v;
        else if (field == "ris_height_m")
            site.ris_height_m = v;
        else
            throw ConfigError(key, "unknown site field");
    }
    if (sites.empty()) throw ConfigError("", "sites file lists no sites");

    std::vector<SiteCandidate> out;
    int expected = 0;
    for (const auto& [index, site] : sites) {
        const std::string prefix = "site." + std::to_string(index) + ".";
        if (index != expected) throw ConfigError("site." + std::to_string(expected), "missing site index");
        ++expected;
        if (!site.r1h_m) throw ConfigError(prefix + "r1h_m", "missing required key");
        if (!site.lateral_offset_m) throw ConfigError(prefix + "lateral_offset_m", "missing required key");
        if (!site.ris_height_m) throw ConfigError(prefix + "ris_height_m", "missing required key");
        if (!std::isfinite(*site.r1h_m)) throw ConfigError(prefix + "r1h_m", "must be finite");

        SiteCandidate c{base, *site.r1h_m};
        c.scenario.lateral_offset_m = *site.lateral_offset_m;
        c.scenario.ris_height_m = *site.ris_height_m;
        try {
            validate(c.scenario);
        } catch (const ConfigError& e) {
            throw ConfigError(prefix + e.key(), "invalid site geometry");
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<SiteCandidate> load_sites(const std::filesystem::path& path, const Scenario& base) {
    return parse_sites(read_key_values(path), base);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Placement and reflection optimizer for an energy-harvesting reconfigurable intelligent surface"};
    app.require_subcommand(1);

    // solve
    CommonOptions solve_opts;
    std::string solve_curve;
    double solve_step = SearchConfig{}.coarse_step_m;
    auto* solve = app.add_subcommand("solve", "Optimal placement, amplitude and phases for one scenario");
    solve_opts.attach(solve);
    solve->add_option("--out", solve_curve, "Write the coarse objective curve as CSV");
    solve->add_option("--coarse-step", solve_step, "Coarse r1h grid step in meters");

    // sweep
    CommonOptions sweep_opts;
    std::vector<double> pc_log;
    std::vector<double> pc_list;
    std::vector<double> ys_list{5.0, 10.0, 20.0};
    std::string sweep_out;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* sweep = app.add_subcommand("sweep", "Solve over a grid of chip powers and lateral offsets, emit CSV");
    sweep_opts.attach(sweep);
    auto* pc_log_opt = sweep->add_option("--pc-log", pc_log, "Log-spaced chip powers: START STOP N (watts)")
                           ->expected(3);
    auto* pc_list_opt = sweep->add_option("--pc-list", pc_list, "Comma-separated chip powers in watts")
                            ->delimiter(',');
    pc_log_opt->excludes(pc_list_opt);
    sweep->add_option("--ys-list", ys_list, "Comma-separated lateral offsets in meters (default 5,10,20)")
        ->delimiter(',');
    sweep->add_option("--out", sweep_out, "Output CSV path (default stdout)");
    sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    // validate
    CommonOptions validate_opts;
    ValidationOptions vopts;
    auto* validate_cmd = app.add_subcommand("validate", "Compare the closed form against brute-force oracles");
    validate_opts.attach(validate_cmd);
    validate_cmd->add_option("--r1h-step", vopts.lattice.r1h_step_m, "Oracle placement step in meters")
        ->check(CLI::PositiveNumber);
    validate_cmd->add_option("--a-step", vopts.lattice.a_step, "Oracle amplitude step")
        ->check(CLI::Range(1e-9, 1.0));
    validate_cmd->add_option("--phase-levels", vopts.phase_levels, "Phase quantization levels for the 2x2 check")
        ->check(CLI::PositiveNumber);

    // select-site
    CommonOptions site_opts;
    std::string sites_path;
    auto* site_cmd = app.add_subcommand("select-site", "Choose among mounted surfaces at fixed positions");
    site_opts.attach(site_cmd);
    site_cmd->add_option("--sites", sites_path, "Sites file (site.N.r1h_m, site.N.lateral_offset_m, ...)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) {
            const Scenario s = solve_opts.load(err);
            SearchConfig search;
            search.coarse_step_m = solve_step;
            search.keep_trace = !solve_curve.empty();
            const PlacementSolution sol = solve_placement(s, search);
            print_solution(out, s, sol);
            if (!solve_curve.empty()) {
                std::ofstream f;
                if (!open_output(f, solve_curve, err)) return kUsage;
                f << "r1h_m,objective,feasible\n";
                for (const auto& p : sol.objective_curve)
                    f << format_number(p.r1h_m) << ',' << format_number(p.objective) << ',' << (p.feasible ? 1 : 0)
                      << '\n';
            }
            return sol.feasible() ? kOk : kInfeasible;
        }

        if (*sweep) {
            const Scenario base = sweep_opts.load(err);
            std::vector<double> pcs = pc_list;
            if (!pc_log.empty()) {
                const double n = pc_log[2];
                if (n < 1 || n != std::floor(n)) {
                    err << "error: --pc-log point count must be a positive integer\n";
                    return kUsage;
                }
                pcs = log_space(pc_log[0], pc_log[1], static_cast<int>(n));
            }
            if (pcs.empty()) pcs = log_space(1e-8, 1e-4, 30);
            if (ys_list.empty()) {
                err << "error: --ys-list is empty\n";
                return kUsage;
            }
            const auto rows = run_sweep(base, pcs, ys_list, {}, threads);
            if (sweep_out.empty()) {
                write_sweep_csv(out, rows);
            } else {
                std::ofstream f;
                if (!open_output(f, sweep_out, err)) return kUsage;
                write_sweep_csv(f, rows);
                if (!f) {
                    err << "error: failed writing '" << sweep_out << "'\n";
                    return kUsage;
                }
            }
            return kOk;
        }

        if (*validate_cmd) {
            const Scenario s = validate_opts.load(err);
            const ValidationReport report = run_validation(s, vopts);
            print_validation_report(out, report);
            out << (report.passed() ? "validation: PASS\n" : "validation: FAIL\n");
            return report.passed() ? kOk : kValidationFailed;
        }

        if (*site_cmd) {
            const Scenario base = site_opts.load(err);
            const auto candidates = load_sites(sites_path, base);
            const SiteSelection sel = select_site(candidates, base.ris_power_w());
            out << "p_ris_w: " << format_number(base.ris_power_w()) << '\n'
                << "index,r1h_m,lateral_offset_m,ris_height_m,feasible,a_opt,snr_opt_db\n";
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                const auto& c = candidates[i];
                const auto& opt = sel.candidates[i].optimum;
                out << i << ',' << format_number(c.r1h_m) << ',' << format_number(c.scenario.lateral_offset_m) << ','
                    << format_number(c.scenario.ris_height_m) << ',' << (opt ? 1 : 0) << ','
                    << (opt ? format_number(opt->amplitude) : "") << ',' << (opt ? format_number(opt->snr_db) : "")
                    << '\n';
            }
            if (!sel.selected) {
                out << "selected: none (no site can sustain itself)\n";
                return kInfeasible;
            }
            out << "selected: " << *sel.selected << '\n';
            return kOk;
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace risopt::cli
