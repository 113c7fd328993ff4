#pragma once

#include "cmph/units.hpp"

namespace cmph {

// Radial quantum numbers: n counts the polynomial degree of the ansatz
// (equal to the radial node count whenever all node positions are positive),
// l is the orbital quantum number.
struct QuantumNumbers {
    int n = 0;
    int l = 0;
    QuantumNumbers() = default;
    QuantumNumbers(int n, int l);
};

// Coefficients of the confining potential
//   V(r) = a r^2 + b r - c/r - d/r^2,   a > 0,
// together with the particle mass and the unit system everything is
// expressed in. Immutable after construction.
struct PotentialParams {
    double a = 0;  // energy/length^2, > 0
    double b = 0;  // energy/length,  >= 0
    double c = 0;  // energy*length
    double d = 0;  // energy*length^2
    double m = 1;  // mass
    UnitSystem units = UnitSystem::natural;

    PotentialParams() = default;
    PotentialParams(double a, double b, double c, double d, double m, UnitSystem units);

    double evaluate(double r) const; // V(r), r > 0

    PotentialParams with_c(double c_new) const;
};

// All potential coefficients and the energy multiplied by 2m/hbar^2, which
// turns the radial equation into
//   phi'' + [eps - a1 r^2 - b1 r + c1/r + (d1 - l(l+1))/r^2] phi = 0.
struct ScaledParams {
    double eps = 0; // 1/length^2
    double a1 = 0;  // 1/length^4
    double b1 = 0;  // 1/length^3
    double c1 = 0;  // 1/length
    double d1 = 0;  // dimensionless
};

// Largest admissible inverse-square coupling, (2l+1)^2 hbar^2 / (8m).
double d_bound(int l, double m, UnitSystem units);

// Effective angular parameter l' = sqrt((2l+1)^2 - 8 m d / hbar^2).
// Throws DomainError when d exceeds d_bound; l' = 0 (d exactly at the
// bound) is accepted, the wave function stays square-integrable there.
double lprime(int l, double d, double m, UnitSystem units);

ScaledParams scale(const PotentialParams& p, double energy);
double unscale_energy(double eps, double m, UnitSystem units);

// Conversion between the two eV-based systems (pure powers of ten).
PotentialParams convert(const PotentialParams& p, UnitSystem target);

// Dimensionless form with hbar = m = 1, using the native length unit as the
// length scale. Keeps the scales so the mapping can be inverted exactly.
struct NaturalizedParams {
    PotentialParams params;   // units == natural, m == 1
    double energy_scale = 1;  // native energy per natural energy unit
    double length_scale = 1;  // native length per natural length unit
    double mass_scale = 1;    // native mass of the particle
    UnitSystem source = UnitSystem::natural;
};

NaturalizedParams to_natural(const PotentialParams& p);
PotentialParams from_natural(const NaturalizedParams& np);

// Guard for operations combining two parameter sets.
void require_same_units(UnitSystem a, UnitSystem b, const char* where);

} // namespace cmph
