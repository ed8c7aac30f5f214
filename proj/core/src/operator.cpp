#include "radgps/operator.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "radgps/observables.hpp"

namespace radgps {

SymmetricOperator assemble(const GridSpec& g, const CollocationSet& set,
                           const PotentialSpec& p, int l) {
    const int N = set.order;
    if (N != g.N) throw std::invalid_argument("assemble: grid order does not match collocation set");

    // Interior node data.
    std::vector<double> r(N + 1), rp(N + 1), veff(N + 1);
    for (int j = 1; j < N; ++j) {
        const double x = set.nodes[j];
        r[j] = to_radial(x, g);
        rp[j] = map_derivatives(x, g).first;
        veff[j] = effective(p, l, r[j]) + mapping_potential(x, g);
    }

    // Keep a contiguous window of interior nodes. The inner head is dropped
    // while the bare potential towers above the ceiling (or, for l >= 2,
    // while the effective potential does); the outer tail is dropped while
    // the effective potential exceeds the ceiling. For l <= 1 the inner
    // region is kept in the face of a merely centrifugal barrier: an
    // artificial inner wall shifts energies by ~r_min^(2l+1), which is fatal
    // at this precision for s and p states.
    int lo = 1, hi = N - 1;
    while (lo <= hi) {
        const double bare = evaluate(p, r[lo]);
        if (bare > kPotentialCeiling || (l >= 2 && veff[lo] > kPotentialCeiling))
            ++lo;
        else
            break;
    }
    while (hi >= lo && veff[hi] > kPotentialCeiling) --hi;
    if (lo > hi) throw std::runtime_error("assemble: no interior nodes below the potential ceiling");

    SymmetricOperator op;
    op.dim = hi - lo + 1;
    op.grid = g;
    op.set = &set;
    op.potential = p;
    op.l = l;
    op.kept.resize(op.dim);
    for (int a = 0; a < op.dim; ++a) op.kept[a] = lo + a;

    const auto& P = set.legendre_at_nodes;
    op.entries.resize(static_cast<std::size_t>(op.dim) * op.dim);
    for (int a = 0; a < op.dim; ++a) {
        const int ja = op.kept[a];
        for (int b = 0; b < op.dim; ++b) {
            const int jb = op.kept[b];
            // Similarity scaling by P_N(x_j) renders the kinetic block symmetric.
            double t = -0.5 * set.d2_at(ja, jb) * (P[jb] / P[ja]) / (rp[ja] * rp[jb]);
            if (a == b) t += veff[ja];
            op.entries[static_cast<std::size_t>(a) * op.dim + b] = t;
        }
    }

    for (int a = 0; a < op.dim; ++a)
        for (int b = a + 1; b < op.dim; ++b) {
            const double hab = op.at(a, b), hba = op.at(b, a);
            if (std::abs(hab - hba) > 1e-12 * std::max(1.0, std::abs(hab)))
                throw std::runtime_error("assemble: symmetry violation at (" +
                                         std::to_string(a) + "," + std::to_string(b) + ")");
        }
    return op;
}

namespace {

// Outermost classical turning point (largest interior node with v <= energy)
// and the effective box edge; used for the confinement ceiling.
bool below_confinement_ceiling(const SymmetricOperator& op, double energy) {
    const GridSpec& g = op.grid;
    const CollocationSet& set = *op.set;
    double r_turn = 0.0;
    for (int j = g.N - 1; j >= 1; --j) {
        const double r = to_radial(set.nodes[j], g);
        if (effective(op.potential, op.l, r) <= energy) {
            r_turn = r;
            break;
        }
    }
    const double r_edge = to_radial(set.nodes[op.kept.back()], g);
    return r_turn < 0.8 * r_edge;
}

} // namespace

Spectrum eigen_lowest(const SymmetricOperator& op, int k) {
    if (k < 1 || k > op.dim)
        throw std::invalid_argument("eigen_lowest: k must be in [1, dim]");

    const int n = op.dim;
    std::vector<double> a(op.entries);  // dsyevd overwrites with eigenvectors
    std::vector<double> w(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', n, a.data(), n, w.data());
    if (info != 0)
        throw std::runtime_error("eigen_lowest: eigensolver failed, info=" + std::to_string(info) +
                                 ", dim=" + std::to_string(n));

    Spectrum spec;
    for (const double e : op.entries)
        spec.operator_norm = std::max(spec.operator_norm, std::abs(e));
    spec.states.reserve(k);
    spec.residual_norms.reserve(k);
    for (int s = 0; s < k; ++s) {
        BoundState st;
        st.energy = w[s];
        st.l = op.l;
        st.kept = op.kept;
        st.coefficients.resize(n);
        for (int i = 0; i < n; ++i)
            st.coefficients[i] = a[static_cast<std::size_t>(i) * n + s];  // column s
        st.physical = below_confinement_ceiling(op, st.energy);
        spec.residual_norms.push_back(residual_check(op, st));
        spec.states.push_back(std::move(st));
    }
    return spec;
}

double residual_check(const SymmetricOperator& op, const BoundState& state) {
    const int n = op.dim;
    const auto& A = state.coefficients;
    double res2 = 0.0, norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double hrow = 0.0;
        const double* row = &op.entries[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n; ++j) hrow += row[j] * A[j];
        const double d = hrow - state.energy * A[i];
        res2 += d * d;
        norm2 += A[i] * A[i];
    }
    return std::sqrt(res2 / norm2);
}

Spectrum solve_states(const GridSpec& g, const CollocationSet& set,
                      const PotentialSpec& p, int l, int k) {
    SymmetricOperator op = assemble(g, set, p, l);
    Spectrum spec = eigen_lowest(op, k);
    for (auto& st : spec.states) {
        reconstruct(st, set, g);
        normalize(st, set, g);
        st.n_r = count_nodes(st);
    }
    return spec;
}

} // namespace radgps
