#include "risopt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace risopt {

std::vector<double> log_space(double start, double stop, int points) {
    if (points < 1 || !(start > 0) || !(stop > 0)) throw std::invalid_argument("log grid needs positive bounds");
    if (points == 1) return {start};
    const double lo = std::log10(start);
    const double hi = std::log10(stop);
    std::vector<double> out;
    out.reserve(points);
    for (int i = 0; i < points; ++i) {
        if (i == 0)
            out.push_back(start);
        else if (i == points - 1)
            out.push_back(stop);
        else
            out.push_back(std::pow(10.0, lo + (hi - lo) * i / (points - 1)));
    }
    return out;
}

Scenario with_chip_power_and_offset(const Scenario& base, double p_c_w, double y_s_m) {
    Scenario s = base;
    s.power_model.p_chip_w = p_c_w;
    s.lateral_offset_m = y_s_m;
    validate(s);
    return s;
}

SweepRow make_sweep_row(double p_c_w, double y_s_m, const PlacementSolution& solution) {
    SweepRow row;
    row.p_c_w = p_c_w;
    row.y_s_m = y_s_m;
    row.p_ris_w = solution.p_ris_w;
    if (const auto& opt = solution.optimum) {
        row.feasible = true;
        row.r1h_opt_m = opt->r1h_m;
        row.a_opt = opt->amplitude;
        row.snr_opt_db = opt->snr_db;
        row.p_harv_w = opt->p_harv_w;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const Scenario& base, std::vector<double> p_c_values, std::vector<double> y_s_values,
                                const SearchConfig& search, unsigned threads) {
    if (p_c_values.empty() || y_s_values.empty()) throw std::invalid_argument("sweep lists must be non-empty");
    std::sort(p_c_values.begin(), p_c_values.end());
    std::sort(y_s_values.begin(), y_s_values.end());

    // Validate every point up front so bad inputs fail before any work.
    std::vector<Scenario> scenarios;
    scenarios.reserve(p_c_values.size() * y_s_values.size());
    for (const double ys : y_s_values)
        for (const double pc : p_c_values) scenarios.push_back(with_chip_power_and_offset(base, pc, ys));

    validate(search, base);

    std::vector<SweepRow> rows(scenarios.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < scenarios.size(); i = next++) {
            const Scenario& s = scenarios[i];
            rows[i] = make_sweep_row(*s.power_model.p_chip_w, s.lateral_offset_m, solve_placement(s, search));
        }
    };

    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(scenarios.size()));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    return rows;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

std::optional<double> optional_cell(const std::string& text, const char* column) {
    if (text.empty()) return std::nullopt;
    return parse_number(text, column);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << format_number(r.p_c_w) << ',' << format_number(r.y_s_m) << ',' << (r.feasible ? 1 : 0) << ','
            << cell(r.r1h_opt_m) << ',' << cell(r.a_opt) << ',' << cell(r.snr_opt_db) << ',' << cell(r.p_harv_w)
            << ',' << format_number(r.p_ris_w) << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader) throw std::runtime_error("unexpected sweep CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cells.push_back(c);
        if (line.back() == ',') cells.emplace_back();
        if (cells.size() != 8) throw std::runtime_error("sweep CSV row has " + std::to_string(cells.size()) + " cells");
        SweepRow r;
        r.p_c_w = parse_number(cells[0], "p_c_w");
        r.y_s_m = parse_number(cells[1], "y_s_m");
        r.feasible = cells[2] == "1";
        r.r1h_opt_m = optional_cell(cells[3], "r1h_opt_m");
        r.a_opt = optional_cell(cells[4], "a_opt");
        r.snr_opt_db = optional_cell(cells[5], "snr_opt_db");
        r.p_harv_w = optional_cell(cells[6], "p_harv_w");
        r.p_ris_w = parse_number(cells[7], "p_ris_w");
        rows.push_back(r);
    }
    return rows;
}

}  // namespace risopt
