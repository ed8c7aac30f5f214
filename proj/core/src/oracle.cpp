#include "radgps/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace radgps {

namespace {

struct Mesh {
    double r0 = 0.0, h = 0.0;
    long n = 0;
    std::vector<double> veff;  // effective potential at mesh points (energy-free)
    int l = 0;
    double Z = 0.0;            // Coulomb strength for the series seed
    bool wall_start = false;   // hard-core start: u pinned to (0, tiny)
};

Mesh build_mesh(const PotentialSpec& p, int l, const ShootingConfig& cfg, double energy_hint) {
    Mesh m;
    m.l = l;
    m.Z = coulomb_strength(p);

    const double c6 = sextic_core_strength(p);
    double r_min = cfg.r_min;
    if (c6 > 0.0) {
        // Inside this radius the r^-6 core exceeds 1e8 hartree and the true
        // amplitude is suppressed below exp(-300); a node there is exact to
        // double precision. (The literal suppression factor underflows at
        // the nominal r_min, so the start is moved outward instead.)
        r_min = std::pow(c6 / 1e8, 1.0 / 6.0);
        m.wall_start = true;
    }

    // Outer end: outermost classical turning point plus enough decay action
    // that the tail-truncation error sits far below the oracle tolerance.
    const long scan_n = 300000;
    const double scan_h = (cfg.r_max - r_min) / scan_n;
    double r_turn = r_min;
    for (long i = scan_n; i >= 0; --i) {
        const double r = r_min + scan_h * i;
        if (effective(p, l, r) <= energy_hint) {
            r_turn = r;
            break;
        }
    }
    double r_up = cfg.r_max;
    double action = 0.0;
    for (long i = 1; i <= scan_n; ++i) {
        const double r = r_turn + scan_h * i;
        if (r >= cfg.r_max) break;
        const double f = 2.0 * (effective(p, l, r) - energy_hint);
        if (f > 0.0) action += std::sqrt(f) * scan_h;
        if (action > 45.0) {
            r_up = r;
            break;
        }
    }

    if (!m.wall_start && l >= 1) {
        // High angular momentum: at the nominal r_min the centrifugal term
        // dominates the step size (r << h) and the recurrence error on the
        // r^(l+1) branch is O(l^6 (h/r)^6) per step — order unity for l ~ 9.
        // Start further out, where the barrier suppresses the amplitude to
        // 1e-25 of its turning-point value; the truncated tail is then far
        // below double precision and the start point sits at r >> h.
        r_min = std::max(r_min, r_turn * std::pow(10.0, -25.0 / (l + 1)));
    }

    m.r0 = r_min;
    m.n = std::max<long>(cfg.steps, 10000);
    if (m.wall_start) {
        // The recurrence coefficient 1 - h^2 f/12 must stay positive at the
        // core head (f = 2(v - E) ~ 2e8 there by construction of r_min), or
        // the sweep oscillates and fakes node counts. Cap h^2 f/12 at 1/4.
        const double f0 = 2.0 * (effective(p, l, r_min) - energy_hint);
        if (f0 > 0.0) {
            const long n_min = static_cast<long>(std::ceil((r_up - r_min) * std::sqrt(f0 / 3.0)));
            m.n = std::max(m.n, n_min);
        }
    }
    m.h = (r_up - r_min) / m.n;
    m.veff.resize(m.n + 1);
    for (long i = 0; i <= m.n; ++i) m.veff[i] = effective(p, l, m.r0 + m.h * i);
    return m;
}

struct Shot {
    double defect;  // normalized log-derivative mismatch at the match point
    int nodes;      // sign changes of the outward solution before the match point
};

Shot integrate(const Mesh& m, double E) {
    const double h = m.h, h2 = h * h;
    const long n = m.n;

    long match = n / 2;
    for (long i = n; i >= 0; --i)
        if (m.veff[i] < E) {
            match = i;
            break;
        }
    match = std::clamp<long>(match, 2, n - 2);

    auto coeff = [&](long i) { return 1.0 - h2 * (2.0 * (m.veff[i] - E)) / 12.0; };

    // Outward sweep: maintain (u[i-1], u[i]) and step to u[i+1], counting
    // nodes and rescaling in the stiff forbidden region. At the end the
    // window holds u[match-1], u[match], u[match+1].
    double u0, u1;  // u[i-1], u[i]
    if (m.wall_start) {
        u0 = 0.0;
        u1 = 1e-150;
    } else {
        // Series seed u ~ r^(l+1) (1 + a r + b r^2) from the Frobenius
        // expansion about the origin: a kills the O(Z h) first-order energy
        // error, b the O(h^2) one (it matters once the start point is moved
        // out under the centrifugal barrier at high l).
        const double a = -m.Z / (m.l + 1);
        const double b = (m.Z * m.Z / (m.l + 1) - E) / (2 * m.l + 3);
        const double ra = m.r0, rb = m.r0 + h;
        u0 = std::pow(ra, m.l + 1) * (1.0 + a * ra + b * ra * ra);
        u1 = std::pow(rb, m.l + 1) * (1.0 + a * rb + b * rb * rb);
        if (u0 == 0.0 && u1 == 0.0) u1 = 1e-150;
    }
    int nodes = 0;
    double back = u0;  // u[i-2] after the shift below
    double ca = coeff(0), cb = coeff(1);
    for (long i = 1; i <= match; ++i) {
        const double cc = coeff(i + 1);
        double u2 = ((12.0 - 10.0 * cb) * u1 - ca * u0) / cc;
        if (std::abs(u2) > 1e100) {
            u2 *= 1e-100;
            u1 *= 1e-100;
            u0 *= 1e-100;
        }
        if (u2 * u1 < 0.0) ++nodes;
        back = u0;
        u0 = u1;
        u1 = u2;
        ca = cb;
        cb = cc;
    }
    // Window now: back = u[match-1], u0 = u[match], u1 = u[match+1].
    const double yo = (u1 - back) / (2.0 * h * u0);

    // Inward sweep: maintain (v[i+1], v[i]) and step to v[i-1], ending with
    // v[match+1], v[match], v[match-1].
    double v1 = 0.0, v0 = 1e-150;  // v[n], v[n-1]
    double fwd = v1;               // v[i+2] after the shift
    ca = coeff(n);
    cb = coeff(n - 1);
    for (long i = n - 1; i >= match; --i) {
        const double cc = coeff(i - 1);
        double v2 = ((12.0 - 10.0 * cb) * v0 - ca * v1) / cc;
        if (std::abs(v2) > 1e100) {
            v2 *= 1e-100;
            v0 *= 1e-100;
            v1 *= 1e-100;
        }
        fwd = v1;
        v1 = v0;
        v0 = v2;
        ca = cb;
        cb = cc;
    }
    // Window now: fwd = v[match+1], v1 = v[match], v0 = v[match-1].
    const double yi = (fwd - v0) / (2.0 * h * v1);

    return {(yo - yi) / (std::abs(yo) + std::abs(yi) + 1.0), nodes};
}

} // namespace

double numerov_eigenvalue(const PotentialSpec& p, int l, const ShootingConfig& cfg,
                          int state_index) {
    if (!(cfg.bracket_lo < cfg.bracket_hi))
        throw BracketError("numerov_eigenvalue: empty energy bracket");

    const Mesh mesh = build_mesh(p, l, cfg, 0.5 * (cfg.bracket_lo + cfg.bracket_hi));

    double e1 = cfg.bracket_lo, e2 = cfg.bracket_hi;
    Shot s1 = integrate(mesh, e1);
    Shot s2 = integrate(mesh, e2);
    if (!(s1.nodes <= state_index && state_index < s2.nodes) && !(s1.defect * s2.defect <= 0.0))
        throw BracketError("numerov_eigenvalue: bracket contains no state with " +
                           std::to_string(state_index) + " nodes (counts " +
                           std::to_string(s1.nodes) + ", " + std::to_string(s2.nodes) + ")");

    // Bisection guarded by node counts, so a defect pole cannot mislead it.
    for (int it = 0; it < 200; ++it) {
        const double em = 0.5 * (e1 + e2);
        const Shot sm = integrate(mesh, em);
        if (sm.nodes > state_index) {
            e2 = em;
            s2 = sm;
        } else if (sm.nodes <= state_index && s1.defect * sm.defect > 0.0) {
            e1 = em;
            s1 = sm;
        } else if (s1.defect * sm.defect <= 0.0 && s1.nodes == sm.nodes) {
            e2 = em;
            s2 = sm;
        } else {
            e1 = em;
            s1 = sm;
        }
        if (e2 - e1 < cfg.match_tolerance * std::max(1.0, std::abs(em))) break;
    }
    return 0.5 * (e1 + e2);
}

std::vector<ValidationRow> cross_validate(const PotentialSpec& p, int l, int k,
                                          const std::vector<double>& energies) {
    std::vector<ValidationRow> rows;
    for (int s = 0; s < k && s < static_cast<int>(energies.size()); ++s) {
        const double e = energies[s];
        ShootingConfig cfg;
        const double half = std::max(2e-3, 5e-4 * std::abs(e));
        cfg.bracket_lo = e - half;
        cfg.bracket_hi = e + half;
        double fd;
        bool converged = true;
        try {
            fd = numerov_eigenvalue(p, l, cfg, s);
            // Richardson step: the matching defect converges at fourth order
            // in the mesh spacing, so a half-resolution solve sharpens the
            // estimate by (E_h - E_2h)/15.
            ShootingConfig half_cfg = cfg;
            half_cfg.steps = cfg.steps / 2;
            try {
                const double fd2 = numerov_eigenvalue(p, l, half_cfg, s);
                fd += (fd - fd2) / 15.0;
            } catch (const BracketError&) {
                // keep the full-resolution value
            }
        } catch (const BracketError&) {
            fd = std::numeric_limits<double>::quiet_NaN();
            converged = false;
        }
        const double delta = std::abs(e - fd);
        rows.push_back({s, e, fd, delta, converged && delta <= 1e-6});
    }
    return rows;
}

} // namespace radgps
