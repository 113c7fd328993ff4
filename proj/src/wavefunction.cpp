#include "cmph/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "cmph/errors.hpp"
#include "cmph/format.hpp"
#include "cmph/quadrature.hpp"
#include "cmph/specfun.hpp"

namespace cmph {
namespace {

double horner(const std::vector<double>& p, double r)
{
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * r + *it;
    return acc;
}

long double horner_ld(const std::vector<double>& p, long double r)
{
    long double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * r + static_cast<long double>(*it);
    return acc;
}

// Positive envelope bound of |phi|: sum |p_k| r^k * r^delta * exp(..).
double phi_envelope(const AnalyticSolution& sol, double r)
{
    double acc = 0;
    for (auto it = sol.poly.rbegin(); it != sol.poly.rend(); ++it)
        acc = acc * r + std::abs(*it);
    const AnsatzExponents& e = sol.exponents;
    return acc * std::exp(e.delta * std::log(r) - 0.5 * e.alpha * r * r - e.beta * r);
}

double natural_length(const AnalyticSolution& sol)
{
    const ScaledParams sp = scale(sol.params, 0.0);
    return std::pow(sp.a1, -0.25); // (hbar^2 / 2ma)^{1/4}
}

// Smallest r past the envelope peak where it falls below frac*peak.
double envelope_tail(const AnalyticSolution& sol, double frac)
{
    const double L = natural_length(sol);
    double peak = 0, r_peak = L;
    for (int i = 0; i <= 400; ++i) {
        const double r = L * std::pow(10.0, -3.0 + 5.0 * i / 400.0);
        const double v = phi_envelope(sol, r);
        if (v > peak) {
            peak = v;
            r_peak = r;
        }
    }
    double r = r_peak;
    while (phi_envelope(sol, r) > frac * peak)
        r *= 1.02;
    return r;
}

} // namespace

double RadialFunction::psi(double r) const
{
    const AnsatzExponents& e = sol.exponents;
    return norm * horner(sol.poly, r)
           * std::exp(0.5 * (e.lp - 1.0) * std::log(r) - 0.5 * e.alpha * r * r - e.beta * r);
}

long double RadialFunction::psi_ld(long double r) const
{
    const AnsatzExponents& e = sol.exponents;
    return static_cast<long double>(norm) * horner_ld(sol.poly, r)
           * expl(0.5L * (static_cast<long double>(e.lp) - 1.0L) * logl(r)
                  - 0.5L * static_cast<long double>(e.alpha) * r * r
                  - static_cast<long double>(e.beta) * r);
}

RadialFunction build(const AnalyticSolution& sol)
{
    RadialFunction f;
    f.sol = sol;
    f.norm = 1.0;
    f.support_rmax = envelope_tail(sol, 1e-16);

    const AnsatzExponents& e = sol.exponents;
    const auto integrand = [&](double r) {
        const double fr = horner(sol.poly, r);
        return fr * fr
               * std::exp((e.lp + 1.0) * std::log(r) - e.alpha * r * r - 2.0 * e.beta * r);
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    spec.abs_tol = 0.0;
    const QuadratureResult I = integrate(integrand, 0.0, f.support_rmax, spec);
    if (!(I.value > 0) || I.error_estimate > 1e-9 * I.value)
        throw QuadratureFailure("norm integral did not converge", I.value, I.error_estimate);
    f.raw_norm_integral = I.value;
    f.norm = 1.0 / std::sqrt(I.value);

    // Closed-form cross-checks through the Gamma/D_nu composition. q_k are
    // the coefficients of f_n^2.
    const int n = sol.qn.n;
    std::vector<double> q(2 * n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            q[i + j] += sol.poly[i] * sol.poly[j];
    const double two_delta = e.lp + 1.0;
    double with_weight = 0, without_weight = 0;
    bool paper_ok = e.lp > 0;
    for (int k = 0; k <= 2 * n; ++k) {
        if (q[k] == 0.0)
            continue;
        with_weight += q[k] * gaussian_power_integral(two_delta + 1.0 + k, e.alpha, 2.0 * e.beta);
        if (paper_ok)
            without_weight +=
                q[k] * gaussian_power_integral(two_delta - 1.0 + k, e.alpha, 2.0 * e.beta);
    }
    f.closed_form_norm = 1.0 / std::sqrt(with_weight);
    f.paper_norm = (paper_ok && n <= 1) ? 1.0 / std::sqrt(without_weight)
                                        : std::numeric_limits<double>::quiet_NaN();
    f.closed_form_agreement =
        (std::abs(f.closed_form_norm / f.norm - 1.0) < 1e-6) ? "confirmed" : "mismatch";
    return f;
}

double ode_residual(const RadialFunction& f, std::span<const double> grid)
{
    const AnalyticSolution& sol = f.sol;
    const AnsatzExponents& e = sol.exponents;
    const ScaledParams sp = scale(sol.params, sol.energy);
    const double lcent = static_cast<double>(sol.qn.l) * (sol.qn.l + 1);

    double worst = 0;
    for (const double r : grid) {
        // step follows the local inverse length scale of phi
        const double v = sp.a1 * r * r + sp.b1 * r - sp.c1 / r + (lcent - sp.d1) / (r * r);
        const double s = std::max({1.0 / r, e.alpha * r + e.beta, std::sqrt(e.alpha),
                                   std::sqrt(std::abs(sp.eps - v))});
        const long double h = 5e-3L / s;
        const long double rl = r;
        const long double pm2 = rl - 2 * h, pm1 = rl - h, pp1 = rl + h, pp2 = rl + 2 * h;
        const long double phi_m2 = pm2 * f.psi_ld(pm2);
        const long double phi_m1 = pm1 * f.psi_ld(pm1);
        const long double phi_0 = rl * f.psi_ld(rl);
        const long double phi_p1 = pp1 * f.psi_ld(pp1);
        const long double phi_p2 = pp2 * f.psi_ld(pp2);
        const long double d2 =
            (-phi_m2 + 16 * phi_m1 - 30 * phi_0 + 16 * phi_p1 - phi_p2) / (12 * h * h);
        const double phi0 = static_cast<double>(phi_0);
        const double residual = static_cast<double>(d2) + (sp.eps - v) * phi0;
        const double magnitude = std::abs(static_cast<double>(d2))
                                 + (std::abs(sp.eps) + sp.a1 * r * r + sp.b1 * r
                                    + std::abs(sp.c1) / r + std::abs(lcent - sp.d1) / (r * r))
                                       * std::abs(phi0);
        if (magnitude > 0)
            worst = std::max(worst, std::abs(residual) / magnitude);
    }
    return worst;
}

std::vector<double> default_residual_grid(const RadialFunction& f, int points)
{
    const double lo = 1e-4 * natural_length(f.sol);
    const double hi = envelope_tail(f.sol, 1e-14);
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    return grid;
}

int nodes_observed(const RadialFunction& f)
{
    const int points = 4096;
    const double lo = 1e-6 * natural_length(f.sol);
    const double hi = f.support_rmax;
    int count = 0;
    double prev = f.psi(lo);
    for (int i = 1; i < points; ++i) {
        const double r = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
        const double cur = f.psi(r);
        if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur))
            ++count;
        if (cur != 0.0)
            prev = cur;
    }
    return count;
}

void write_grid_csv(std::ostream& os, const RadialFunction& f, std::span<const double> grid)
{
    os << "r,psi,phi\n";
    for (const double r : grid) {
        const double psi = (r == 0.0) ? psi_at_origin(f) : f.psi(r);
        const double phi = (r == 0.0) ? 0.0 : f.phi(r);
        os << fmt12(r) << ',' << fmt12(psi) << ',' << fmt12(phi) << '\n';
    }
}

double psi_at_origin(const RadialFunction& f)
{
    const double expo = 0.5 * (f.sol.exponents.lp - 1.0);
    const double lead = f.norm * f.sol.poly[0];
    if (std::abs(expo) < 1e-12)
        return lead;
    if (expo > 0)
        return 0.0;
    return lead > 0 ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
}

} // namespace cmph
