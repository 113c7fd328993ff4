#pragma once

#include <vector>

#include "cmph/aeim.hpp"

namespace cmph {

struct ShootingConfig {
    double r_min = 0;     // 0 => 1e-6 * (hbar^2/2ma)^{1/4}
    double r_max = 0;     // 0 => auto from the envelope / turning point
    int steps = 20000;    // >= 1000
    double e_tol = 1e-10; // relative energy tolerance of the refinement
    int node_target = 0;  // index of the eigenvalue (= interior node count)
};

struct NumericLevel {
    double energy = 0;              // eigenvalue on the requested grid
    double energy_refined = 0;      // same solve on a half-step grid
    double disc_error_estimate = 0; // |refined - energy| / 15 (h^4 Richardson)
    int nodes = 0;
    std::vector<double> grid_r;
    std::vector<double> grid_phi; // glued, max-normalized
    std::vector<std::pair<double, double>> bisection_history;
    bool stiffness_warning = false; // d close to its bound, marginal origin behavior
};

// (n+1)-th lowest eigenvalue of the reduced radial equation for the given
// potential and l, via Numerov integration with outward/inward matching at
// the outermost classical turning point: node-counting bisection isolates
// the level, Ridders refinement polishes the matching defect. The potential
// does not need to satisfy any of the analytic constraint relations.
NumericLevel numerov_solve(const PotentialParams& p, int l, int n, ShootingConfig cfg = {});

struct CompareReport {
    double e_analytic = 0;
    double e_numeric = 0;
    double rel_deviation = 0;
    double l2_distance = 0; // after common normalization on the oracle grid
    int node_target = 0;
};

// Runs the oracle against an analytic solution. The eigenvalue index is the
// number of positive real nodes of the analytic wave function (for b = 0
// even-degree states half the polynomial roots sit at negative r and the
// physical node count is n/2).
CompareReport compare(const AnalyticSolution& sol, ShootingConfig cfg = {});

// CSV dump of the oracle grid, header "r,phi".
void write_oracle_csv(std::ostream& os, const NumericLevel& level);

} // namespace cmph
