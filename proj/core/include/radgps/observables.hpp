#pragma once

#include <utility>
#include <vector>

#include "radgps/collocation.hpp"
#include "radgps/mapping.hpp"
#include "radgps/operator.hpp"

namespace radgps {

// Fills state.psi on the full grid: psi(r_j) = A_j P_N(x_j) / sqrt(r'(x_j))
// on the kept interior nodes, 0 at the boundaries and dropped nodes.
void reconstruct(BoundState& state, const CollocationSet& set, const GridSpec& g);

// Scales psi (and coefficients) so that sum_j w_j r'(x_j) psi(r_j)^2 = 1 and
// orients the state so its first extremum is positive. Throws on a zero state.
void normalize(BoundState& state, const CollocationSet& set, const GridSpec& g);

// <r^p> by Lobatto quadrature; the state must be normalized.
double expectation(const BoundState& state, int power, const CollocationSet& set,
                   const GridSpec& g);

// Number of radial nodes: strict sign changes of psi across the sampled
// support. Entries below 1e-12 x max|psi| are treated as zero, and the
// exponentially dead tails (below 1e-8 x max|psi| at the ends) are excluded
// so that eigensolver round-off cannot masquerade as extra crossings.
int count_nodes(const BoundState& state);

// (r_j, |r R|^2 = psi^2) samples over the full grid, monotone in r.
std::vector<std::pair<double, double>> radial_density(const BoundState& state,
                                                      const CollocationSet& set,
                                                      const GridSpec& g);

} // namespace radgps
