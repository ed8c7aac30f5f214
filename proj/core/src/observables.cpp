#include "radgps/observables.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace radgps {

void reconstruct(BoundState& state, const CollocationSet& set, const GridSpec& g) {
    const int N = set.order;
    state.psi.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::size_t i = 0; i < state.kept.size(); ++i) {
        const int j = state.kept[i];
        const double rp = map_derivatives(set.nodes[j], g).first;
        state.psi[j] = state.coefficients[i] * set.legendre_at_nodes[j] / std::sqrt(rp);
    }
    state.normalized = false;
}

void normalize(BoundState& state, const CollocationSet& set, const GridSpec& g) {
    double norm2 = 0.0;
    for (const int j : state.kept) {
        const double rp = map_derivatives(set.nodes[j], g).first;
        norm2 += set.weights[j] * rp * state.psi[j] * state.psi[j];
    }
    if (!(norm2 > 0.0)) throw std::runtime_error("normalize: zero state");

    double scale = 1.0 / std::sqrt(norm2);

    // Orientation: first extremum of psi (scanning outward from the origin)
    // must be positive.
    double maxabs = 0.0;
    for (const int j : state.kept) maxabs = std::max(maxabs, std::abs(state.psi[j]));
    for (std::size_t i = 1; i + 1 < state.kept.size(); ++i) {
        const double prev = std::abs(state.psi[state.kept[i - 1]]);
        const double here = std::abs(state.psi[state.kept[i]]);
        const double next = std::abs(state.psi[state.kept[i + 1]]);
        if (here >= prev && here >= next && here > 1e-6 * maxabs) {
            if (state.psi[state.kept[i]] < 0.0) scale = -scale;
            break;
        }
    }

    for (const int j : state.kept) state.psi[j] *= scale;
    for (auto& a : state.coefficients) a *= scale;
    state.normalized = true;
}

double expectation(const BoundState& state, int power, const CollocationSet& set,
                   const GridSpec& g) {
    if (!state.normalized) throw std::logic_error("expectation: state must be normalized");
    double sum = 0.0;
    for (const int j : state.kept) {
        const double x = set.nodes[j];
        const double r = to_radial(x, g);
        const double rp = map_derivatives(x, g).first;
        sum += set.weights[j] * rp * std::pow(r, power) * state.psi[j] * state.psi[j];
    }
    return sum;
}

int count_nodes(const BoundState& state) {
    const auto& kept = state.kept;
    double maxabs = 0.0;
    for (const int j : kept) maxabs = std::max(maxabs, std::abs(state.psi[j]));
    if (maxabs == 0.0) return 0;

    // Support window: outside it |psi| never rises above 1e-8 x max, which is
    // below the round-off floor of a dense eigensolve on these matrices.
    std::size_t first = 0, last = kept.size() - 1;
    while (first < kept.size() && std::abs(state.psi[kept[first]]) < 1e-8 * maxabs) ++first;
    while (last > first && std::abs(state.psi[kept[last]]) < 1e-8 * maxabs) --last;

    int crossings = 0;
    double prev_sign = 0.0;
    for (std::size_t i = first; i <= last; ++i) {
        const double v = state.psi[kept[i]];
        if (std::abs(v) < 1e-12 * maxabs) continue;
        const double sign = v > 0.0 ? 1.0 : -1.0;
        if (prev_sign != 0.0 && sign != prev_sign) ++crossings;
        prev_sign = sign;
    }
    return crossings;
}

std::vector<std::pair<double, double>> radial_density(const BoundState& state,
                                                      const CollocationSet& set,
                                                      const GridSpec& g) {
    if (!state.normalized) throw std::logic_error("radial_density: state must be normalized");
    std::vector<std::pair<double, double>> rows;
    rows.reserve(state.psi.size());
    for (std::size_t j = 0; j < state.psi.size(); ++j)
        rows.emplace_back(to_radial(set.nodes[j], g), state.psi[j] * state.psi[j]);
    return rows;
}

} // namespace radgps
