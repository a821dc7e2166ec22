#include "risopt/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risopt {

ElementGrid::ElementGrid(int rows, int cols, std::vector<ElementOffset> offsets)
    : rows_(rows), cols_(cols), offsets_(std::move(offsets)) {
    if (rows < 1 || cols < 1 || offsets_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("element grid dimensions do not match offset count");
}

const ElementOffset& ElementGrid::at(int p, int l) const {
    if (p < 1 || p > rows_ || l < 1 || l > cols_)
        throw std::out_of_range("element (" + std::to_string(p) + ", " + std::to_string(l) + ") outside grid");
    return offsets_[static_cast<std::size_t>(p - 1) * cols_ + (l - 1)];
}

ElementGrid element_offsets(int rows, int cols, double dx_m, double dy_m) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("element grid needs at least one row and column");
    std::vector<ElementOffset> offsets;
    offsets.reserve(static_cast<std::size_t>(rows) * cols);
    const double p_center = (rows + 1) / 2.0;
    const double l_center = (cols + 1) / 2.0;
    for (int p = 1; p <= rows; ++p)
        for (int l = 1; l <= cols; ++l)
            offsets.push_back({(p - p_center) * dx_m, (l - l_center) * dy_m});
    return ElementGrid(rows, cols, std::move(offsets));
}

ElementGrid element_offsets(const Scenario& s) {
    return element_offsets(s.ris_rows, s.ris_cols, s.element_dx_m, s.element_dy_m);
}

CenterDistances center_distances(double r1h_m, const Scenario& s) {
    const double ys2 = s.lateral_offset_m * s.lateral_offset_m;
    const double dht = s.ris_height_m - s.tx_height_m;
    const double dhr = s.ris_height_m - s.rx_height_m;
    const double r2h = s.txrx_horizontal_m - r1h_m;
    return {std::sqrt(r1h_m * r1h_m + ys2 + dht * dht), std::sqrt(r2h * r2h + ys2 + dhr * dhr)};
}

std::vector<ElementDistances> element_distances(double r1h_m, const ElementGrid& grid, const Scenario& s) {
    const double ys2 = s.lateral_offset_m * s.lateral_offset_m;
    const double dht = s.ris_height_m - s.tx_height_m;
    const double dhr = s.ris_height_m - s.rx_height_m;
    const double r2h = s.txrx_horizontal_m - r1h_m;

    std::vector<ElementDistances> out;
    out.reserve(grid.size());
    for (const auto& e : grid.offsets()) {
        // Moving an element towards the TX moves it away from the RX.
        const double a1 = r1h_m - e.along_m;
        const double v1 = dht - e.vertical_m;
        const double a2 = r2h + e.along_m;
        const double v2 = dhr - e.vertical_m;
        out.push_back({std::sqrt(a1 * a1 + ys2 + v1 * v1), std::sqrt(a2 * a2 + ys2 + v2 * v2)});
    }
    return out;
}

double incidence_angle(double r1h_m, const Scenario& s) {
    const double dht = s.ris_height_m - s.tx_height_m;
    return std::atan(std::sqrt(r1h_m * r1h_m + dht * dht) / s.lateral_offset_m);
}

double departure_angle(double r1h_m, const Scenario& s) {
    const double dhr = s.ris_height_m - s.rx_height_m;
    const double dx = r1h_m - s.txrx_horizontal_m;
    return std::atan(std::sqrt(dx * dx + dhr * dhr) / s.lateral_offset_m);
}

LinkGeometry link_geometry(double r1h_m, const Scenario& s) {
    const auto [r1, r2] = center_distances(r1h_m, s);
    return {r1h_m, r1, r2, incidence_angle(r1h_m, s), departure_angle(r1h_m, s)};
}

}  // namespace risopt
