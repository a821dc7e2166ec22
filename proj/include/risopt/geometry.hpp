#ifndef RISOPT_GEOMETRY_HPP
#define RISOPT_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "risopt/scenario.hpp"

namespace risopt {

/// Offset of one reflective unit from the surface center. `along_m` runs along
/// the street (x) axis towards the TX; `vertical_m` is positive below center.
struct ElementOffset {
    double along_m = 0.0;
    double vertical_m = 0.0;
};

/// Centered offsets of an M_x x M_y surface, stored with the vertical (l)
/// index fastest: element (p, l), 1-indexed, lives at (p-1)*cols + (l-1).
class ElementGrid {
public:
    ElementGrid() = default;
    ElementGrid(int rows, int cols, std::vector<ElementOffset> offsets);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return offsets_.size(); }

    /// 1-indexed access.
    const ElementOffset& at(int p, int l) const;
    const std::vector<ElementOffset>& offsets() const { return offsets_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ElementOffset> offsets_;
};

/// d_p = (p - (M_x+1)/2) d_x, d_l = (l - (M_y+1)/2) d_y.
ElementGrid element_offsets(int rows, int cols, double dx_m, double dy_m);
ElementGrid element_offsets(const Scenario& scenario);

struct CenterDistances {
    double tx_to_ris_m = 0.0;
    double ris_to_rx_m = 0.0;
};

struct ElementDistances {
    double tx_to_element_m = 0.0;
    double element_to_rx_m = 0.0;
};

/// Far-field geometry seen from the surface center at one placement.
struct LinkGeometry {
    double r1h_m = 0.0;
    double r1_m = 0.0;
    double r2_m = 0.0;
    double theta_i_rad = 0.0;
    double theta_r_rad = 0.0;
};

CenterDistances center_distances(double r1h_m, const Scenario& scenario);

/// Exact TX/RX distances to every element, in grid order.
std::vector<ElementDistances> element_distances(double r1h_m, const ElementGrid& grid,
                                                const Scenario& scenario);

double incidence_angle(double r1h_m, const Scenario& scenario);
double departure_angle(double r1h_m, const Scenario& scenario);

LinkGeometry link_geometry(double r1h_m, const Scenario& scenario);

/// Propagation phase 2 pi (r1 + r2) / lambda accumulated over one element's
/// path. Shared by the SNR sum and the co-phasing rule so the two cancel
/// exactly.
inline double path_phase_rad(const ElementDistances& d, double wavelength_m) {
    return 2.0 * kPi * (d.tx_to_element_m + d.element_to_rx_m) / wavelength_m;
}

}  // namespace risopt

#endif
