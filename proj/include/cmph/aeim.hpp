#pragma once

#include <complex>
#include <vector>

#include "cmph/potential.hpp"

namespace cmph {

// Exponents of the wave-function ansatz
//   phi(r) = f_n(r) r^delta exp(-alpha r^2/2 - beta r),
// fixed by the quadratic/linear/centrifugal coefficients of the potential:
//   alpha = sqrt(a1), beta = b1/(2 sqrt(a1)), delta = (1 + l')/2.
struct AnsatzExponents {
    double alpha = 0; // 1/length^2
    double beta = 0;  // 1/length
    double delta = 0; // dimensionless
    double lp = 0;    // effective angular parameter l'
};

AnsatzExponents ansatz_exponents(const PotentialParams& p, int l);

// Node positions: the roots of the monic polynomial factor f_n. The chosen
// branch normally has all roots real and positive (then they are literally
// the radial nodes); for the b = 0 even-degree states they come in +/-
// pairs, and the diagnostic flag records any complex pairs.
struct NodeSet {
    int n = 0;
    std::vector<double> roots;                   // real parts, ascending
    std::vector<std::complex<double>> raw_roots; // as found
    std::vector<double> sym;                     // elementary symmetric e_1..e_n
    bool all_real = true;
    bool all_real_positive = true;
    int positive_count = 0;
};

struct ConstraintDiagnostics {
    double matching_residual = 0; // max relative residual over the coefficient equations
    double level_relation_residual = 0; // hand-written low-degree relations (n <= 3)
    bool complex_roots = false;
};

struct AnalyticSolution {
    QuantumNumbers qn;
    PotentialParams params; // carries the solved c
    AnsatzExponents exponents;
    NodeSet nodes;
    std::vector<double> poly; // monic f_n coefficients, ascending, size n+1
    double energy = 0;
    ConstraintDiagnostics residuals;
};

// Closed-form energy
//   E_nl = sqrt(hbar^2 a / 2m) (2 + 2n + l') - b^2/(4a).
// Valid when c satisfies the level's constraint relation; the formula itself
// only needs (a, b, d, n, l).
double energy_closed_form(QuantumNumbers qn, const PotentialParams& p);

// The Coulomb coefficient that makes the degree-n ansatz exact for (n, l).
// b = 0 short-circuits to the pseudoharmonic branch c = 0 for even n; for
// odd n the matching system forces c > 0 even at b = 0.
double constrain_c(int n, int l, double a, double b, double d, double m, UnitSystem units);

// Inverse of the one-node (n = 1) constraint: the b >= 0 reproducing the
// given c. Throws DomainError when c is below the n = 1 minimum
// sqrt((1+l') hbar^2/m sqrt(hbar^2 a/2m)), where no such b exists.
double constrain_b_from_c(int l, double a, double c, double d, double m, UnitSystem units);

// Node positions for a parameter set whose c already satisfies the level
// constraint (as produced by constrain_c).
NodeSet solve_nodes(int n, int l, const PotentialParams& p);

// Full solve: constraint, nodes, energy and residual diagnostics.
AnalyticSolution solve_level(QuantumNumbers qn, double a, double b, double d, double m,
                             UnitSystem units);

// Re-evaluates every matching relation of the level's system on a finished
// solution and returns the residual diagnostics (never throws).
ConstraintDiagnostics validate_constraint(const AnalyticSolution& sol);

// Scale factor sqrt(hbar^2 a / 2m) entering the energy formula; the level
// spacing E_{n+1,l} - E_{n,l} equals exactly twice this.
double energy_scale(const PotentialParams& p);

} // namespace cmph
