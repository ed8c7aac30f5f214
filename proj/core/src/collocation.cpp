#include "radgps/collocation.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace radgps {

std::pair<double, double> legendre_pair(int n, double x) {
    if (n < 0) throw std::domain_error("legendre_pair: order must be >= 0");
    if (std::abs(x) > 1.0 + 1e-14)
        throw std::domain_error("legendre_pair: x outside [-1,1]: " + std::to_string(x));

    if (n == 0) return {1.0, 0.0};
    if (n == 1) return {x, 1.0};

    double pm1 = 1.0, p = x;  // P_0, P_1
    for (int k = 2; k <= n; ++k) {
        double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
        pm1 = p;
        p = pk;
    }
    double one_minus_x2 = (1.0 - x) * (1.0 + x);
    double dp;
    if (one_minus_x2 < 1e-24) {
        // endpoint: P_n'(+-1) = (+-1)^(n-1) n(n+1)/2
        double sign = (x > 0.0 || n % 2 == 1) ? 1.0 : -1.0;
        dp = sign * 0.5 * n * (n + 1);
    } else {
        dp = n * (pm1 - x * p) / one_minus_x2;
    }
    return {p, dp};
}

namespace {

// Second derivative of P_N from the Legendre differential equation.
double legendre_second(int N, double x, double p, double dp) {
    return (2.0 * x * dp - static_cast<double>(N) * (N + 1) * p) / ((1.0 - x) * (1.0 + x));
}

} // namespace

std::vector<double> lobatto_nodes(int N) {
    if (N < 2) throw std::domain_error("lobatto_nodes: order must be >= 2");
    std::vector<double> x(static_cast<std::size_t>(N) + 1);
    x[0] = -1.0;
    x[N] = 1.0;
    if (N % 2 == 0) x[N / 2] = 0.0;

    constexpr double pi = 3.14159265358979323846;
    // Newton on P_N' for the negative half; mirror for the rest.
    for (int j = 1; j <= (N - 1) / 2; ++j) {
        double xj = -std::cos(pi * j / N);
        double dx = 1.0;
        bool done = false;
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre_pair(N, xj);
            double d2p = legendre_second(N, xj, p, dp);
            dx = dp / d2p;
            xj -= dx;
            if (std::abs(dx) < 1e-15) {
                done = true;
                break;
            }
        }
        if (!done && std::abs(dx) > 1e-13)
            throw std::runtime_error("lobatto_nodes: Newton failed to converge at root " +
                                     std::to_string(j) + " of order " + std::to_string(N));
        x[j] = xj;
        x[N - j] = -xj;
    }
    for (int j = 0; j < N; ++j)
        if (!(x[j] < x[j + 1]))
            throw std::runtime_error("lobatto_nodes: nodes not strictly increasing");
    return x;
}

std::vector<double> lobatto_weights(const std::vector<double>& nodes,
                                    const std::vector<double>& legendre_at_nodes) {
    const int N = static_cast<int>(nodes.size()) - 1;
    std::vector<double> w(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        double p = legendre_at_nodes[j];
        w[j] = 2.0 / (static_cast<double>(N) * (N + 1) * p * p);
    }
    return w;
}

double cardinal_eval(int j, double x, const CollocationSet& set) {
    const int N = set.order;
    const double xj = set.nodes[j];
    if (std::abs(x - xj) < 1e-14) return 1.0;
    auto [p, dp] = legendre_pair(N, x);
    (void)p;
    double num = -((1.0 - x) * (1.0 + x)) * dp;
    double den = static_cast<double>(N) * (N + 1) * set.legendre_at_nodes[j] * (x - xj);
    return num / den;
}

std::vector<double> second_derivative_table(const CollocationSet& set) {
    const int N = set.order;
    const std::size_t n = static_cast<std::size_t>(N) + 1;
    const auto& x = set.nodes;
    const auto& P = set.legendre_at_nodes;

    // First-derivative collocation matrix for the Lobatto cardinal basis.
    std::vector<double> D(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) D[i * n + j] = (P[i] / P[j]) / (x[i] - x[j]);
    D[0] = -0.25 * N * (N + 1);
    D[n * n - 1] = 0.25 * N * (N + 1);

    // Differentiating the degree-N interpolant twice equals applying D twice.
    std::vector<double> d2(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            double dik = D[i * n + k];
            if (dik == 0.0) continue;
            const double* Dk = &D[k * n];
            double* d2i = &d2[i * n];
            for (std::size_t j = 0; j < n; ++j) d2i[j] += dik * Dk[j];
        }
    return d2;
}

CollocationSet build_collocation(int N) {
    CollocationSet set;
    set.order = N;
    set.nodes = lobatto_nodes(N);
    set.legendre_at_nodes.resize(set.nodes.size());
    for (std::size_t j = 0; j < set.nodes.size(); ++j)
        set.legendre_at_nodes[j] = legendre_pair(N, set.nodes[j]).first;
    set.weights = lobatto_weights(set.nodes, set.legendre_at_nodes);
    set.d2 = second_derivative_table(set);
    return set;
}

} // namespace radgps
