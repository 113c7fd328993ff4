#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cmph/aeim.hpp"

namespace cmph {

// Normalized radial wave function
//   psi(r) = N f_n(r) r^{(l'-1)/2} exp(-alpha r^2/2 - beta r),
// with int_0^inf |psi|^2 r^2 dr = 1 (the spherical harmonic carries the
// angular normalization). Immutable after build(); evaluation is reentrant.
struct RadialFunction {
    AnalyticSolution sol;
    double norm = 1;               // N from adaptive quadrature (primary path)
    double raw_norm_integral = 0;  // int |psi_unnorm|^2 r^2 dr
    double closed_form_norm = 0;   // N via the Gamma/D_nu composition, r^2 weighted
    double paper_norm = 0;         // companion constant normalizing int |psi|^2 dr (n <= 1)
    std::string closed_form_agreement; // "confirmed" | "mismatch"
    double support_rmax = 0;       // envelope below ~1e-16 of its peak beyond this

    double psi(double r) const;
    double phi(double r) const { return r * psi(r); }
    long double psi_ld(long double r) const; // extended precision, for residual checks
};

// Builds and normalizes the wave function; throws QuadratureFailure if the
// norm integral cannot reach 1e-10 relative accuracy.
RadialFunction build(const AnalyticSolution& sol);

// Sup over the grid of |phi'' + (eps - v) phi| divided by the local term
// magnitude, with phi'' from a five-point stencil whose step follows the
// local curvature scale. An exact solution scores ~1e-10, a 1% error in c
// scores above 1e-3.
double ode_residual(const RadialFunction& f, std::span<const double> grid);

// Log-spaced default grid over [1e-4 L, R_tail], L = (hbar^2/2ma)^{1/4},
// R_tail where the envelope drops below 1e-14 of its maximum.
std::vector<double> default_residual_grid(const RadialFunction& f, int points = 512);

// Counts sign changes of psi on a log-spaced grid of >= 4096 points.
int nodes_observed(const RadialFunction& f);

// CSV export, header "r,psi,phi", 12 significant digits.
void write_grid_csv(std::ostream& os, const RadialFunction& f, std::span<const double> grid);

// psi(r -> 0+): finite for l' = 1, zero for l' > 1, +/-inf for l' < 1.
double psi_at_origin(const RadialFunction& f);

} // namespace cmph
