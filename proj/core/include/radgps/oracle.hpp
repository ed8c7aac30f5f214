#pragma once

#include <stdexcept>
#include <vector>

#include "radgps/potentials.hpp"

namespace radgps {

// Uniform-mesh Numerov shooting configuration. Deliberately independent of
// the spectral machinery: this solver shares no discretization code with it
// and serves as a cross-check.
struct ShootingConfig {
    double r_min = 1e-6;        // bohr; ignored (recomputed) for hard-core potentials
    double r_max = 300.0;       // upper cap for the integration mesh, bohr
    long steps = 200000;        // mesh intervals (>= 1e4 for production accuracy)
    double bracket_lo = 0.0;    // energy bracket, hartree
    double bracket_hi = 0.0;
    double match_tolerance = 1e-13;  // relative bisection width target
};

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Converges one eigenvalue inside [bracket_lo, bracket_hi] by two-sided
// Numerov integration with logarithmic-derivative matching at the outermost
// classical turning point. `state_index` is the radial node count of the
// targeted state; it guards the bisection so the bracket cannot slip onto a
// neighboring state. Throws BracketError when the bracket provably contains
// no such state.
double numerov_eigenvalue(const PotentialSpec& p, int l, const ShootingConfig& cfg,
                          int state_index);

struct ValidationRow {
    int state;       // radial node count
    double spectral; // energy from the spectral solver, hartree
    double shooting; // energy from this oracle, hartree
    double delta;    // |spectral - shooting|
    bool ok;         // delta <= 1e-6
};

// Re-derives each supplied energy with the shooting method and reports the
// per-state discrepancies (flagging any above 1e-6 hartree).
std::vector<ValidationRow> cross_validate(const PotentialSpec& p, int l, int k,
                                          const std::vector<double>& energies);

} // namespace radgps
