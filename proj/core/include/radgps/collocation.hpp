#pragma once

#include <utility>
#include <vector>

namespace radgps {

// Legendre-Gauss-Lobatto collocation data for a fixed polynomial order N.
// Everything here lives on the reference interval [-1, 1]; the radial map is
// applied downstream. Immutable after construction and safe to share between
// concurrent solves.
struct CollocationSet {
    int order = 0;                          // N
    std::vector<double> nodes;              // x_0 = -1 .. x_N = +1, strictly increasing
    std::vector<double> legendre_at_nodes;  // P_N(x_j)
    std::vector<double> weights;            // Lobatto quadrature weights w_j
    std::vector<double> d2;                 // (N+1)^2 row-major: d2[j'*(N+1)+j] = g_j''(x_{j'})

    double d2_at(int jp, int j) const { return d2[static_cast<std::size_t>(jp) * (order + 1) + j]; }
};

// Value and first derivative of the Legendre polynomial P_n at x, |x| <= 1.
// Throws std::domain_error for |x| > 1 + 1e-14.
std::pair<double, double> legendre_pair(int n, double x);

// The N+1 Lobatto points: -1, the N-1 roots of P_N', and +1.
// Newton iteration from Chebyshev-Lobatto guesses; throws std::runtime_error
// if a root fails to settle within the iteration budget.
std::vector<double> lobatto_nodes(int N);

// Lobatto weights w_j = 2 / (N(N+1) P_N(x_j)^2); exact to degree 2N-1.
std::vector<double> lobatto_weights(const std::vector<double>& nodes,
                                    const std::vector<double>& legendre_at_nodes);

// Cardinal function g_j evaluated at arbitrary x in [-1, 1].
double cardinal_eval(int j, double x, const CollocationSet& set);

// Dense table of cardinal second derivatives, d2[j'][j] = g_j''(x_{j'}),
// computed by squaring the first-derivative collocation matrix (exact for
// the degree-N cardinal basis).
std::vector<double> second_derivative_table(const CollocationSet& set);

// Builds the complete set (nodes, P_N values, weights, d2) for order N.
CollocationSet build_collocation(int N);

} // namespace radgps
