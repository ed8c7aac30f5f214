#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace radgps {

// V(r) = a r^2 + b r^-4 + c r^-6, a > 0, c > 0 (b may have either sign).
struct PerturbedOscillator {
    double a, b, c;
};

// V(r) = -Z/r + g r + lambda r^2, Z > 0, g >= 0, lambda >= 0.
struct PerturbedCoulomb {
    double Z, g, lambda;
};

// V(r) = r^4.
struct Quartic {};

// V(r) = sum of coefficient * r^power over signed integer powers.
struct PowerSeries {
    std::vector<std::pair<double, int>> terms;  // (coefficient, power)
};

using PotentialSpec = std::variant<PerturbedOscillator, PerturbedCoulomb, Quartic, PowerSeries>;

// Thrown by parse_potential; `pos` is the byte offset of the offending token.
struct PotentialParseError : std::runtime_error {
    std::size_t pos;
    PotentialParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg), pos(p) {}
};

// Bare potential value at r > 0 (throws std::domain_error for r <= 0).
double evaluate(const PotentialSpec& p, double r);

// Effective radial potential: evaluate(p, r) + l(l+1)/(2 r^2).
double effective(const PotentialSpec& p, int l, double r);

// Parses the descriptor grammar:
//   oscillator a=<f> b=<f> c=<f>
//   coulomb Z=<f> g=<f> lambda=<f>
//   quartic
//   series <coeff>:<power>[,<coeff>:<power>...]
// Numeric literals may be decimal or exact rationals like 1/32.
// Throws PotentialParseError on syntax errors and std::invalid_argument on
// invariant violations (e.g. c <= 0 in the oscillator family, or a power
// series whose highest positive power has a non-positive coefficient).
PotentialSpec parse_potential(const std::string& text);

// Canonical one-line description (used in output headers and density files).
std::string describe(const PotentialSpec& p);

// Coefficient of the r^-6 term if positive, else 0. Controls the
// short-range suppression handling in the shooting oracle.
double sextic_core_strength(const PotentialSpec& p);

// Z such that V ~ -Z/r near the origin (0 when no Coulomb term).
double coulomb_strength(const PotentialSpec& p);

} // namespace radgps
