#include "cmph/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "cmph/errors.hpp"
#include "cmph/format.hpp"
#include "cmph/wavefunction.hpp"

namespace cmph {
namespace {

struct Workspace {
    std::vector<double> r;  // uniform grid
    std::vector<double> v;  // scaled potential a1 r^2 + b1 r - c1/r + (l(l+1)-d1)/r^2
    double h = 0;
    double delta = 0;       // indicial exponent (1+l')/2
    double c1 = 0;
    int argmin_v = 0;
};

struct ShotResult {
    int nodes = 0;
    double wronskian = 0; // matching defect at the turning point
    bool valid = false;
};

// One shot at scaled energy eps: outward from r_min, inward from r_max,
// glued at the outermost classical turning point.
ShotResult shoot(const Workspace& ws, double eps, std::vector<double>* glued = nullptr)
{
    const int N = static_cast<int>(ws.r.size());
    const double h = ws.h, h2 = h * h;

    // outermost turning point (fall back to the potential minimum)
    int ic = ws.argmin_v;
    for (int i = N - 1; i >= 1; --i) {
        if (ws.v[i] <= eps) {
            ic = i;
            break;
        }
    }
    ic = std::clamp(ic, 2, N - 3);

    const auto fval = [&](int i) { return ws.v[i] - eps; };
    ShotResult out;

    std::vector<double> fwd(ic + 2), bwd(N);
    // outward start from the indicial behavior phi ~ r^delta (1 - c1 r / (2 delta))
    for (int i = 0; i < 2; ++i) {
        const double r = ws.r[i];
        fwd[i] = std::pow(r, ws.delta) * (1.0 - ws.c1 * r / (2.0 * ws.delta));
    }
    for (int i = 1; i <= ic; ++i) {
        const double y2 = fwd[i] * (2.0 + 5.0 * h2 * fval(i) / 6.0);
        const double y1 = fwd[i - 1] * (1.0 - h2 * fval(i - 1) / 12.0);
        fwd[i + 1] = (y2 - y1) / (1.0 - h2 * fval(i + 1) / 12.0);
        if (std::abs(fwd[i + 1]) > 1e250) {
            const double s = 1e-250;
            for (int k = 0; k <= i + 1; ++k)
                fwd[k] *= s;
        }
    }
    // inward start from a decaying tail
    bwd[N - 1] = 0.0;
    bwd[N - 2] = 1e-30;
    for (int i = N - 2; i > ic - 2; --i) {
        const double y2 = bwd[i] * (2.0 + 5.0 * h2 * fval(i) / 6.0);
        const double y1 = bwd[i + 1] * (1.0 - h2 * fval(i + 1) / 12.0);
        bwd[i - 1] = (y2 - y1) / (1.0 - h2 * fval(i - 1) / 12.0);
        if (std::abs(bwd[i - 1]) > 1e250) {
            const double s = 1e-250;
            for (int k = i - 1; k <= N - 1; ++k)
                bwd[k] *= s;
        }
    }

    if (fwd[ic] == 0.0 || bwd[ic] == 0.0)
        return out; // pathological match point, let the caller perturb

    // scale-invariant normalization for the defect
    double fmax = 0, bmax = 0;
    for (int i = 0; i <= ic + 1; ++i) fmax = std::max(fmax, std::abs(fwd[i]));
    for (int i = ic - 1; i < N; ++i) bmax = std::max(bmax, std::abs(bwd[i]));
    if (fmax == 0 || bmax == 0)
        return out;

    // O(h^4)-consistent derivative at the match point
    const auto deriv = [&](const std::vector<double>& y, int i) {
        return ((1.0 - h2 * fval(i + 1) / 6.0) * y[i + 1]
                - (1.0 - h2 * fval(i - 1) / 6.0) * y[i - 1]) / (2.0 * h);
    };
    const double fo = fwd[ic] / fmax, dfo = deriv(fwd, ic) / fmax;
    const double fi = bwd[ic] / bmax, dfi = deriv(bwd, ic) / bmax;
    out.wronskian = dfo * fi - fo * dfi;
    out.valid = true;

    // node count of the glued function
    const double ratio = fwd[ic] / bwd[ic];
    int nodes = 0;
    double prev = fwd[0];
    for (int i = 1; i <= ic; ++i) {
        if (prev != 0.0 && fwd[i] != 0.0 && std::signbit(prev) != std::signbit(fwd[i]))
            ++nodes;
        if (fwd[i] != 0.0) prev = fwd[i];
    }
    prev = bwd[ic] * ratio;
    for (int i = ic + 1; i < N - 1; ++i) {
        const double cur = bwd[i] * ratio;
        if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur))
            ++nodes;
        if (cur != 0.0) prev = cur;
    }
    out.nodes = nodes;

    if (glued) {
        glued->resize(N);
        double peak = 0;
        for (int i = 0; i <= ic; ++i) (*glued)[i] = fwd[i];
        for (int i = ic + 1; i < N; ++i) (*glued)[i] = bwd[i] * ratio;
        for (double y : *glued) peak = std::max(peak, std::abs(y));
        for (double& y : *glued) y /= peak;
    }
    return out;
}

double solve_on_grid(const Workspace& ws, int node_target, double e_tol,
                     std::vector<std::pair<double, double>>* history,
                     std::vector<double>* glued, int* nodes_out)
{
    // energy window: [v_min - |v_min|, v(r_max)], expanded if needed
    double vmin = ws.v[ws.argmin_v];
    double lo = vmin - std::abs(vmin) - 1.0;
    double hi = ws.v.back();
    const auto count = [&](double eps) { return shoot(ws, eps).nodes; };

    for (int guard = 0; count(hi) <= node_target; ++guard) {
        if (guard > 60)
            throw BracketFailure("no eigenvalue with " + std::to_string(node_target)
                                 + " nodes below the potential at r_max");
        hi += std::max(1.0, std::abs(hi));
    }
    for (int guard = 0; count(lo) > node_target; ++guard) {
        if (guard > 60)
            throw BracketFailure("node count does not drop at the lower window edge");
        lo -= std::max(1.0, std::abs(lo));
    }

    // bisect on the node count until the window brackets the transition
    // node_target -> node_target + 1, which pins the eigenvalue
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (history)
            history->emplace_back(lo, hi);
        if (count(mid) <= node_target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 0.25 * e_tol * std::max(1.0, std::abs(lo)))
            break;
    }

    // Ridders refinement on the matching defect inside the node window
    double a = lo, b = hi;
    ShotResult sa = shoot(ws, a), sb = shoot(ws, b);
    if (sa.valid && sb.valid && sa.wronskian * sb.wronskian < 0) {
        for (int it = 0; it < 80 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
            const double m = 0.5 * (a + b);
            const ShotResult sm = shoot(ws, m);
            if (!sm.valid)
                break;
            const double root = sm.wronskian * sm.wronskian - sa.wronskian * sb.wronskian;
            if (root <= 0)
                break;
            const double x = m + (m - a) * ((sa.wronskian >= sb.wronskian ? 1.0 : -1.0)
                                            * sm.wronskian / std::sqrt(root));
            const ShotResult sx = shoot(ws, x);
            if (!sx.valid)
                break;
            if (sm.wronskian * sx.wronskian < 0) {
                a = std::min(m, x); sa = (m < x) ? sm : sx;
                b = std::max(m, x); sb = (m < x) ? sx : sm;
            } else if (sa.wronskian * sx.wronskian < 0) {
                b = x; sb = sx;
            } else {
                a = x; sa = sx;
            }
            if (history)
                history->emplace_back(a, b);
            if (b - a < 0.01 * e_tol * std::max(1.0, std::abs(a)))
                break;
        }
    }
    const double eps = 0.5 * (a + b);
    const ShotResult final_shot = shoot(ws, eps, glued);
    if (nodes_out)
        *nodes_out = final_shot.nodes;
    return eps;
}

Workspace make_workspace(const PotentialParams& p, int l, double eps_hint, double r_min,
                         double r_max, int steps)
{
    Workspace ws;
    const ScaledParams sp = scale(p, 0.0);
    const double lp = lprime(l, p.d, p.m, p.units);
    ws.delta = 0.5 * (1.0 + lp);
    ws.c1 = sp.c1;
    const double L = std::pow(sp.a1, -0.25);

    if (r_min <= 0)
        r_min = 1e-6 * L;
    if (r_max <= 0) {
        // beyond both the turning point of the target energy and the point
        // where the Gaussian envelope is down by ~1e-14
        const double alpha = std::sqrt(sp.a1);
        double r_env = std::sqrt(2.0 * 33.0 / alpha);
        double r_turn = std::sqrt(std::max(eps_hint, 1.0) / sp.a1);
        r_max = 1.3 * std::max(r_env, 1.5 * r_turn);
    }
    if (!(r_min < r_max))
        throw DomainError("shooting grid requires r_min < r_max");

    const double lcent = static_cast<double>(l) * (l + 1);
    ws.r.resize(steps + 1);
    ws.v.resize(steps + 1);
    ws.h = (r_max - r_min) / steps;
    double vmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= steps; ++i) {
        const double r = r_min + i * ws.h;
        ws.r[i] = r;
        ws.v[i] = sp.a1 * r * r + sp.b1 * r - sp.c1 / r + (lcent - sp.d1) / (r * r);
        if (ws.v[i] < vmin) {
            vmin = ws.v[i];
            ws.argmin_v = i;
        }
    }
    return ws;
}

} // namespace

NumericLevel numerov_solve(const PotentialParams& p, int l, int n, ShootingConfig cfg)
{
    if (cfg.steps < 1000)
        throw DomainError("shooting requires at least 1000 steps");
    if (n < 0 || l < 0)
        throw DomainError("quantum numbers must be non-negative");
    cfg.node_target = n;

    const double lp = lprime(l, p.d, p.m, p.units);
    // crude scale for the grid extent: pseudoharmonic level of this index
    const ScaledParams sp = scale(p, 0.0);
    const double eps_hint = std::sqrt(sp.a1) * (2.0 + 2.0 * n + lp);

    NumericLevel out;
    out.stiffness_warning = lp < 0.1;

    Workspace ws = make_workspace(p, l, eps_hint, cfg.r_min, cfg.r_max, cfg.steps);
    const double eps = solve_on_grid(ws, n, cfg.e_tol, &out.bisection_history, &out.grid_phi,
                                     &out.nodes);
    out.grid_r = ws.r;
    out.energy = unscale_energy(eps, p.m, p.units);

    Workspace ws2 = make_workspace(p, l, eps_hint, ws.r.front(), ws.r.back(), cfg.steps * 2);
    const double eps2 = solve_on_grid(ws2, n, cfg.e_tol, nullptr, nullptr, nullptr);
    out.energy_refined = unscale_energy(eps2, p.m, p.units);
    out.disc_error_estimate = std::abs(out.energy_refined - out.energy) / 15.0;
    return out;
}

CompareReport compare(const AnalyticSolution& sol, ShootingConfig cfg)
{
    CompareReport rep;
    rep.node_target = sol.nodes.positive_count;
    rep.e_analytic = sol.energy;

    const NumericLevel level = numerov_solve(sol.params, sol.qn.l, rep.node_target, cfg);
    rep.e_numeric = level.energy_refined;
    rep.rel_deviation = std::abs(rep.e_numeric - rep.e_analytic)
                        / std::max(std::abs(rep.e_analytic), 1e-300);

    // L2 distance of the normalized reduced functions on the oracle grid
    const RadialFunction f = build(sol);
    const auto& r = level.grid_r;
    const int N = static_cast<int>(r.size());
    std::vector<double> pa(N), pn = level.grid_phi;
    for (int i = 0; i < N; ++i)
        pa[i] = f.phi(r[i]);
    const double h = r[1] - r[0];
    const auto norm2 = [&](const std::vector<double>& y) {
        double acc = 0;
        for (int i = 0; i < N; ++i)
            acc += y[i] * y[i] * ((i == 0 || i == N - 1) ? 0.5 : 1.0);
        return std::sqrt(acc * h);
    };
    const double na = norm2(pa), nn = norm2(pn);
    // fix the relative sign at the largest analytic amplitude
    int peak = 0;
    for (int i = 0; i < N; ++i)
        if (std::abs(pa[i]) > std::abs(pa[peak]))
            peak = i;
    const double sign = (pa[peak] / na) * (pn[peak] / nn) < 0 ? -1.0 : 1.0;
    double acc = 0;
    for (int i = 0; i < N; ++i) {
        const double diff = pa[i] / na - sign * pn[i] / nn;
        acc += diff * diff * ((i == 0 || i == N - 1) ? 0.5 : 1.0);
    }
    rep.l2_distance = std::sqrt(acc * h);
    return rep;
}

void write_oracle_csv(std::ostream& os, const NumericLevel& level)
{
    os << "r,phi\n";
    for (size_t i = 0; i < level.grid_r.size(); ++i)
        os << fmt12(level.grid_r[i]) << ',' << fmt12(level.grid_phi[i]) << '\n';
}

} // namespace cmph
