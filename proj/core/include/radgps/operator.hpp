#pragma once

#include <vector>

#include "radgps/collocation.hpp"
#include "radgps/mapping.hpp"
#include "radgps/potentials.hpp"

namespace radgps {

// One eigenpair of the radial problem. `coefficients` are the interior-basis
// coefficients A_j on the kept nodes; `psi` is the reduced radial function
// psi = r R sampled on the full grid (boundary and dropped entries are 0,
// filled by observables::reconstruct).
struct BoundState {
    double energy = 0.0;       // hartree
    int l = 0;
    int n_r = -1;              // node count; -1 until counted
    std::vector<double> coefficients;  // A_j, kept interior nodes
    std::vector<int> kept;             // grid indices of the kept interior nodes
    std::vector<double> psi;           // psi(r_j) on all N+1 nodes, bohr^{-1/2}
    bool normalized = false;
    bool physical = true;      // below the confinement ceiling
};

// Dense real symmetric discrete Hamiltonian on the kept interior nodes.
struct SymmetricOperator {
    int dim = 0;               // number of kept interior nodes (<= N-1)
    std::vector<double> entries;  // dim x dim, row-major, hartree
    std::vector<int> kept;        // grid indices (subset of 1..N-1, contiguous)
    GridSpec grid;
    const CollocationSet* set = nullptr;  // non-owning
    PotentialSpec potential;
    int l = 0;

    double at(int a, int b) const { return entries[static_cast<std::size_t>(a) * dim + b]; }
};

struct Spectrum {
    std::vector<BoundState> states;       // energies ascending
    std::vector<double> residual_norms;   // ||H A - eps A|| / ||A|| per state
    double operator_norm = 0.0;           // max |H_ab|: the backward-error yardstick
                                          // (residuals of a healthy solve sit at a few
                                          // machine epsilons of this scale)
};

// Effective potentials above this value poison the dense eigensolve
// (round-off noise scales with the matrix norm), so nodes deep inside such
// regions are excluded from assembly; the bound-state amplitude there is
// exponentially negligible.
inline constexpr double kPotentialCeiling = 1e6;

// Builds H[a][b] = -1/2 * d2~[ja][jb] / (r'_ja r'_jb) + delta_ab (v + v_m)
// on the kept interior nodes, where d2~ is the similarity-scaled cardinal
// second-derivative table (symmetric by construction). Throws on symmetry
// violation or an empty keep window.
SymmetricOperator assemble(const GridSpec& g, const CollocationSet& set,
                           const PotentialSpec& p, int l);

// k algebraically smallest eigenpairs, ascending, eigenvectors orthonormal.
// States whose classical turning point exceeds 0.8 x the effective box edge
// are marked non-physical (box-contaminated).
Spectrum eigen_lowest(const SymmetricOperator& op, int k);

// ||H A - eps A||_2 / ||A||_2 for one state.
double residual_check(const SymmetricOperator& op, const BoundState& state);

// Convenience pipeline: assemble + eigen_lowest + reconstruct + normalize +
// node count, returning fully populated states.
Spectrum solve_states(const GridSpec& g, const CollocationSet& set,
                      const PotentialSpec& p, int l, int k);

} // namespace radgps
