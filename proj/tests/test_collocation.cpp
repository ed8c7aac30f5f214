#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "radgps/collocation.hpp"

using namespace radgps;
using radgps::testing::shared_set;

namespace {

// Exact integral of x^k over [-1, 1].
double monomial_integral(int k) { return (k % 2 == 1) ? 0.0 : 2.0 / (k + 1); }

// Fourth-order central second difference via one Richardson level.
template <typename F>
double fd_second(const F& f, double x, double h) {
    auto d = [&](double hh) { return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh); };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

} // namespace

TEST_SUITE("collocation") {

TEST_CASE("legendre closed forms at low order") {
    // P2(x) = (3x^2 - 1)/2, P2'(x) = 3x.
    auto [p2, d2v] = legendre_pair(2, 0.3);
    CHECK(p2 == doctest::Approx(-0.365).epsilon(1e-14));
    CHECK(d2v == doctest::Approx(0.9).epsilon(1e-14));

    auto [p0, d0] = legendre_pair(0, 0.77);
    CHECK(p0 == 1.0);
    CHECK(d0 == 0.0);
    auto [p1, d1] = legendre_pair(1, -0.2);
    CHECK(p1 == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(d1 == 1.0);
}

TEST_CASE("legendre endpoint derivative identity") {
    // P_N'(+-1) = (+-1)^(N-1) N(N+1)/2.
    for (int n : {2, 3, 8, 17, 40}) {
        const double mag = 0.5 * n * (n + 1);
        CHECK(legendre_pair(n, 1.0).second == doctest::Approx(mag).epsilon(1e-13));
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        CHECK(legendre_pair(n, -1.0).second == doctest::Approx(sign * mag).epsilon(1e-13));
    }
}

TEST_CASE("legendre domain guard") {
    CHECK_THROWS_AS(legendre_pair(3, 1.1), std::domain_error);
    CHECK_THROWS_AS(legendre_pair(3, -1.0000001), std::domain_error);
}

TEST_CASE("node sets at analytically known orders") {
    const auto n2 = lobatto_nodes(2);
    REQUIRE(n2.size() == 3);
    CHECK(n2[0] == -1.0);
    CHECK(std::fabs(n2[1]) <= 1e-15);
    CHECK(n2[2] == 1.0);

    // Interior nodes of N=4 are the roots of P4': +-sqrt(3/7) and 0.
    const auto n4 = lobatto_nodes(4);
    REQUIRE(n4.size() == 5);
    const double root = std::sqrt(3.0 / 7.0);
    CHECK(n4[0] == -1.0);
    CHECK(n4[1] == doctest::Approx(-root).epsilon(1e-14));
    CHECK(std::fabs(n4[2]) <= 1e-15);
    CHECK(n4[3] == doctest::Approx(root).epsilon(1e-14));
    CHECK(n4[4] == 1.0);
}

TEST_CASE("nodes are symmetric and strictly increasing") {
    for (int N : {8, 31, 120}) {
        const auto nodes = lobatto_nodes(N);
        REQUIRE(static_cast<int>(nodes.size()) == N + 1);
        for (int j = 0; j < N; ++j) CHECK(nodes[j] < nodes[j + 1]);
        for (int j = 0; j <= N; ++j)
            CHECK(std::fabs(nodes[j] + nodes[N - j]) <= 1e-15);
    }
}

TEST_CASE("weights: endpoint value and total mass") {
    for (int N : {4, 8, 33}) {
        const auto& set = shared_set(N);
        CHECK(set.weights[0] == doctest::Approx(2.0 / (N * (N + 1))).epsilon(1e-13));
        CHECK(set.weights[N] == doctest::Approx(2.0 / (N * (N + 1))).epsilon(1e-13));
        double total = 0.0;
        for (double w : set.weights) {
            CHECK(w > 0.0);
            total += w;
        }
        CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("quadrature integrates degree <= 2N-1 exactly") {
    const int N = 8;
    const auto& set = shared_set(N);
    for (int k = 0; k <= 2 * N - 1; ++k) {
        double s = 0.0;
        for (int j = 0; j <= N; ++j) s += set.weights[j] * std::pow(set.nodes[j], k);
        CHECK(std::fabs(s - monomial_integral(k)) <= 1e-14);
    }
    // Degree 2N fails by the known defect, confirming the rule is not
    // accidentally over-exact (i.e. the test above has teeth).
    double s = 0.0;
    for (int j = 0; j <= N; ++j) s += set.weights[j] * std::pow(set.nodes[j], 2 * N);
    CHECK(std::fabs(s - monomial_integral(2 * N)) > 1e-6);
}

TEST_CASE("cardinal functions: delta property and partition of unity") {
    const int N = 16;
    const auto& set = shared_set(N);
    for (int j = 0; j <= N; ++j)
        for (int i = 0; i <= N; ++i) {
            const double v = cardinal_eval(j, set.nodes[i], set);
            CHECK(std::fabs(v - (i == j ? 1.0 : 0.0)) <= 1e-12);
        }

    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    for (int t = 0; t < 25; ++t) {
        const double x = ux(rng);
        double s = 0.0;
        for (int j = 0; j <= N; ++j) s += cardinal_eval(j, x, set);
        CHECK(std::fabs(s - 1.0) <= 1e-12);
    }
}

TEST_CASE("second-derivative table differentiates monomials exactly") {
    const int N = 8;
    const auto& set = shared_set(N);
    for (int k = 0; k <= N; ++k)
        for (int i = 0; i <= N; ++i) {
            double s = 0.0;
            for (int j = 0; j <= N; ++j) s += set.d2_at(i, j) * std::pow(set.nodes[j], k);
            const double expect = k < 2 ? 0.0 : k * (k - 1) * std::pow(set.nodes[i], k - 2);
            CHECK(std::fabs(s - expect) <= 1e-8);
        }
}

TEST_CASE("second-derivative table matches finite differences of the cardinals") {
    // The finite-difference truncation error grows like the cardinals' sixth
    // derivative (steeply with N), while round-off grows like 1/h^2, so the
    // step is tuned per order to sit near the crossover.
    for (auto [N, h] : {std::pair<int, double>{4, 1e-3}, {8, 1e-3}, {16, 3e-4}}) {
        const auto& set = shared_set(N);
        for (int i = 1; i < N; ++i) {  // endpoint rows need |x +- 2h| <= 1
            if (1.0 - std::fabs(set.nodes[i]) < 2.5 * h) continue;
            for (int j = 0; j <= N; ++j) {
                const double fd = fd_second(
                    [&](double x) { return cardinal_eval(j, x, set); }, set.nodes[i], h);
                const double exact = set.d2_at(i, j);
                CHECK(std::fabs(fd - exact) <= 1e-6 * std::fmax(1.0, std::fabs(exact)));
            }
        }
    }
}

TEST_CASE("build_collocation is self-consistent") {
    const int N = 12;
    const auto& set = shared_set(N);
    CHECK(set.order == N);
    REQUIRE(static_cast<int>(set.nodes.size()) == N + 1);
    REQUIRE(static_cast<int>(set.weights.size()) == N + 1);
    REQUIRE(static_cast<int>(set.legendre_at_nodes.size()) == N + 1);
    REQUIRE(set.d2.size() == static_cast<std::size_t>((N + 1) * (N + 1)));
    for (int j = 0; j <= N; ++j) {
        CHECK(set.legendre_at_nodes[j] ==
              doctest::Approx(legendre_pair(N, set.nodes[j]).first).epsilon(1e-13));
        // Lobatto weight identity ties nodes, P_N values and weights together.
        const double w = 2.0 / (N * (N + 1) * set.legendre_at_nodes[j] * set.legendre_at_nodes[j]);
        CHECK(set.weights[j] == doctest::Approx(w).epsilon(1e-12));
    }
}

} // TEST_SUITE
