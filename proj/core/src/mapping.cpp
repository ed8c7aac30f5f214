#include "radgps/mapping.hpp"

namespace radgps {

double to_radial(double x, const GridSpec& g) {
    if (x == 1.0) return g.r_max;  // exact endpoint, avoids a final rounding
    const double L = g.length_scale();
    return L * (1.0 + x) / (1.0 - x + g.map_alpha());
}

MapDerivatives map_derivatives(double x, const GridSpec& g) {
    const double L = g.length_scale();
    const double a = g.map_alpha();
    const double u = 1.0 - x + a;
    const double u2 = u * u;
    const double c = L * (2.0 + a);
    return {c / u2, 2.0 * c / (u2 * u), 6.0 * c / (u2 * u2)};
}

double mapping_potential(double x, const GridSpec& g) {
    const auto d = map_derivatives(x, g);
    const double rp2 = d.first * d.first;
    return (3.0 * d.second * d.second - 2.0 * d.third * d.first) / (8.0 * rp2 * rp2);
}

} // namespace radgps
