#pragma once

namespace radgps {

// Radial grid parameters. The map from the reference coordinate x in [-1,1]
// to r in [0, r_max] is
//
//   r(x) = L (1+x) / (1 - x + 2L/r_max)
//
// with the public `alpha` knob equal to the map length scale L in bohr
// (default 25). Increasing alpha pushes nodes outward; decreasing it packs
// them toward the origin.
struct GridSpec {
    int N = 300;           // collocation order
    double r_max = 200.0;  // box radius, bohr
    double alpha = 25.0;   // map length scale L, bohr

    double length_scale() const { return alpha; }               // L
    double map_alpha() const { return 2.0 * alpha / r_max; }    // dimensionless map parameter

    bool operator==(const GridSpec&) const = default;
};

// r(x); endpoints map exactly: r(-1) = 0, r(+1) = r_max.
double to_radial(double x, const GridSpec& g);

struct MapDerivatives {
    double first;   // r'(x)
    double second;  // r''(x)
    double third;   // r'''(x)
};

// Analytic derivatives of the map.
MapDerivatives map_derivatives(double x, const GridSpec& g);

// Residual potential generated by the coordinate transformation,
//   v_m = [3 r''^2 - 2 r''' r'] / (8 r'^4),
// computed from the general formula. For the algebraic map above the
// numerator cancels identically, so this is 0 to machine precision.
double mapping_potential(double x, const GridSpec& g);

} // namespace radgps
