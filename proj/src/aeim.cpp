#include "cmph/aeim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "cmph/errors.hpp"

namespace cmph {
namespace {

constexpr double newton_tol = 1e-12;
constexpr int newton_max_iter = 200;

// Substituting phi = P(r) r^delta e^{-alpha r^2/2 - beta r} with monic P of
// degree n into the reduced radial equation and collecting powers of r gives
//   C_j = (j+1)(j+2 delta) p_{j+1} + 2 alpha (n+1-j) p_{j-1}
//         + (gamma - 2 beta j) p_j = 0,   j = 0..n+1,
// where gamma = c1 - 2 beta delta. The equations j = n..1 fix p_{n-1}..p_0
// for given gamma; the j = 0 equation is the scalar constraint
//   F(gamma) = 2 delta p_1 + gamma p_0 = 0.
std::vector<double> poly_given_gamma(int n, double alpha, double beta, double delta,
                                     double gamma)
{
    std::vector<double> p(n + 1, 0.0);
    p[n] = 1.0;
    for (int j = n; j >= 1; --j) {
        const double pj1 = (j + 1 <= n) ? p[j + 1] : 0.0;
        p[j - 1] = -((j + 1.0) * (j + 2.0 * delta) * pj1 + (gamma - 2.0 * beta * j) * p[j])
                   / (2.0 * alpha * (n + 1.0 - j));
    }
    return p;
}

// F(gamma) and dF/dgamma (the recurrence is differentiated alongside).
void scalar_constraint(int n, double alpha, double beta, double delta, double gamma,
                       double& f, double& df)
{
    std::vector<double> p(n + 1, 0.0), dp(n + 1, 0.0);
    p[n] = 1.0;
    for (int j = n; j >= 1; --j) {
        const double pj1 = (j + 1 <= n) ? p[j + 1] : 0.0;
        const double dpj1 = (j + 1 <= n) ? dp[j + 1] : 0.0;
        const double denom = 2.0 * alpha * (n + 1.0 - j);
        p[j - 1] = -((j + 1.0) * (j + 2.0 * delta) * pj1 + (gamma - 2.0 * beta * j) * p[j]) / denom;
        dp[j - 1] = -((j + 1.0) * (j + 2.0 * delta) * dpj1 + p[j]
                      + (gamma - 2.0 * beta * j) * dp[j]) / denom;
    }
    const double p1 = (n >= 1) ? p[1] : 0.0;
    const double dp1 = (n >= 1) ? dp[1] : 0.0;
    f = 2.0 * delta * p1 + gamma * p[0];
    df = 2.0 * delta * dp1 + p[0] + gamma * dp[0];
}

// Coefficients of F as a polynomial in gamma (degree n+1), obtained by
// running the recurrence with polynomial arithmetic.
std::vector<double> gamma_polynomial(int n, double alpha, double beta, double delta)
{
    using Poly = std::vector<double>; // ascending coefficients in gamma
    const auto add = [](Poly& a, const Poly& b, double s) {
        if (a.size() < b.size()) a.resize(b.size(), 0.0);
        for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    };
    const auto mul_gamma_plus = [](const Poly& a, double k) { // (gamma + k) * a
        Poly r(a.size() + 1, 0.0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] += k * a[i];
            r[i + 1] += a[i];
        }
        return r;
    };
    std::vector<Poly> p(n + 1);
    p[n] = {1.0};
    for (int j = n; j >= 1; --j) {
        const double denom = 2.0 * alpha * (n + 1.0 - j);
        Poly acc = mul_gamma_plus(p[j], -2.0 * beta * j);
        if (j + 1 <= n)
            add(acc, p[j + 1], (j + 1.0) * (j + 2.0 * delta));
        for (double& v : acc) v /= -denom;
        p[j - 1] = std::move(acc);
    }
    Poly f = mul_gamma_plus(p[0], 0.0);
    if (n >= 1)
        add(f, p[1], 2.0 * delta);
    return f;
}

std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs)
{
    // coeffs ascending; strip negligible leading terms first
    int deg = static_cast<int>(coeffs.size()) - 1;
    double lead_scale = 0;
    for (double v : coeffs) lead_scale = std::max(lead_scale, std::abs(v));
    while (deg > 0 && std::abs(coeffs[deg]) < 1e-14 * lead_scale)
        --deg;
    if (deg < 1)
        return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i)
        companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
    for (int i = 1; i < deg; ++i)
        companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(deg);
    for (int i = 0; i < deg; ++i)
        roots[i] = es.eigenvalues()[i];
    return roots;
}

NodeSet nodes_from_poly(int n, const std::vector<double>& p)
{
    NodeSet ns;
    ns.n = n;
    ns.raw_roots = companion_roots(p);
    double root_scale = 1.0;
    for (const auto& z : ns.raw_roots)
        root_scale = std::max(root_scale, std::abs(z));
    for (const auto& z : ns.raw_roots) {
        if (std::abs(z.imag()) > 1e-9 * root_scale)
            ns.all_real = false;
        ns.roots.push_back(z.real());
    }
    std::sort(ns.roots.begin(), ns.roots.end());
    ns.positive_count = static_cast<int>(
        std::count_if(ns.roots.begin(), ns.roots.end(), [](double r) { return r > 0; }));
    ns.all_real_positive = ns.all_real && ns.positive_count == n;
    // elementary symmetric functions from the monic coefficients
    ns.sym.resize(n);
    for (int k = 1; k <= n; ++k)
        ns.sym[k - 1] = ((k % 2) ? -1.0 : 1.0) * p[n - k];
    return ns;
}

struct GammaSolve {
    double gamma = 0;
    std::vector<double> poly;
    NodeSet nodes;
};

// All real candidates of F(gamma) = 0, Newton-polished. The physical branch
// is the one whose polynomial has n real positive roots; the pseudoharmonic
// gamma = 0 branch is selected directly for b = 0 with even n.
GammaSolve solve_gamma(int n, double alpha, double beta, double delta)
{
    GammaSolve out;
    if (n == 0) {
        out.gamma = 0.0;
        out.poly = {1.0};
        out.nodes.n = 0;
        return out;
    }
    if (beta == 0.0 && n % 2 == 0) {
        out.gamma = 0.0;
        out.poly = poly_given_gamma(n, alpha, beta, delta, 0.0);
        out.nodes = nodes_from_poly(n, out.poly);
        return out;
    }

    const std::vector<double> fpoly = gamma_polynomial(n, alpha, beta, delta);
    const auto candidates = companion_roots(fpoly);
    const double gamma_scale = beta + std::sqrt(beta * beta + 4.0 * alpha * delta);

    double best_score = -1.0;
    bool found = false;
    for (const auto& z : candidates) {
        if (std::abs(z.imag()) > 1e-7 * std::max(gamma_scale, std::abs(z)))
            continue;
        // damped Newton polish on the scalar constraint
        double g = z.real();
        for (int it = 0; it < newton_max_iter; ++it) {
            double f, df;
            scalar_constraint(n, alpha, beta, delta, g, f, df);
            if (df == 0.0)
                break;
            double step = f / df;
            const double cap = 0.5 * std::max(gamma_scale, std::abs(g));
            step = std::clamp(step, -cap, cap);
            g -= step;
            if (std::abs(step) < newton_tol * std::max(1.0, std::abs(g)))
                break;
        }
        auto poly = poly_given_gamma(n, alpha, beta, delta, g);
        // accept only if the closing equation is satisfied relative to its terms
        const double t_a = 2.0 * delta * ((n >= 1) ? poly[1] : 0.0);
        const double t_b = g * poly[0];
        if (std::abs(t_a + t_b) > 1e-8 * std::max({std::abs(t_a), std::abs(t_b), 1e-30}))
            continue;
        auto nodes = nodes_from_poly(n, poly);
        // rank: all real positive first, then by positives, then by gamma
        double score = (nodes.all_real_positive ? 1e6 : 0.0) + 1e3 * nodes.positive_count + g / gamma_scale;
        if (!found || score > best_score) {
            best_score = score;
            out.gamma = g;
            out.poly = std::move(poly);
            out.nodes = std::move(nodes);
            found = true;
        }
    }
    if (!found)
        throw NoConvergence("no real solution of the coefficient-matching constraint for n = "
                            + std::to_string(n));
    return out;
}

double relative_residual(double lhs, double magnitude)
{
    return std::abs(lhs) / std::max(magnitude, 1e-300);
}

} // namespace

AnsatzExponents ansatz_exponents(const PotentialParams& p, int l)
{
    const ScaledParams sp = scale(p, 0.0);
    AnsatzExponents e;
    e.lp = lprime(l, p.d, p.m, p.units);
    e.alpha = std::sqrt(sp.a1);
    e.beta = sp.b1 / (2.0 * e.alpha);
    e.delta = 0.5 * (1.0 + e.lp);
    return e;
}

double energy_scale(const PotentialParams& p)
{
    const double hb = hbar(p.units);
    return std::sqrt(hb * hb * p.a / (2.0 * p.m));
}

double energy_closed_form(QuantumNumbers qn, const PotentialParams& p)
{
    const double lp = lprime(qn.l, p.d, p.m, p.units);
    return energy_scale(p) * (2.0 + 2.0 * qn.n + lp) - p.b * p.b / (4.0 * p.a);
}

double constrain_c(int n, int l, double a, double b, double d, double m, UnitSystem units)
{
    if (n < 0)
        throw DomainError("n must be non-negative");
    const PotentialParams p(a, b, 0.0, d, m, units);
    const AnsatzExponents e = ansatz_exponents(p, l);
    if (n == 0) {
        // c1 = 2 beta delta, unscaled
        return b == 0.0 ? 0.0
                        : unscale_energy(2.0 * e.beta * e.delta, m, units);
    }
    if (b == 0.0 && n % 2 == 0)
        return 0.0; // pseudoharmonic branch
    if (n == 1) {
        // closed form: gamma = beta + sqrt(beta^2 + 4 alpha delta)
        const double gamma = e.beta + std::sqrt(e.beta * e.beta + 4.0 * e.alpha * e.delta);
        return unscale_energy(2.0 * e.beta * e.delta + gamma, m, units);
    }
    const GammaSolve gs = solve_gamma(n, e.alpha, e.beta, e.delta);
    return unscale_energy(2.0 * e.beta * e.delta + gs.gamma, m, units);
}

double constrain_b_from_c(int l, double a, double c, double d, double m, UnitSystem units)
{
    if (!(a > 0))
        throw DomainError("a must be positive");
    const double hb = hbar(units);
    const double lp = lprime(l, d, m, units);
    const double k = std::sqrt(2.0 * m * a) / hb;       // sqrt(2ma/hbar^2)
    const double W = hb * hb / m * std::sqrt(hb * hb * a / (2.0 * m));
    const double cmin2 = (1.0 + lp) * W;                 // square of the smallest reachable c
    if (c * c < cmin2 * (1.0 - 1e-12))
        throw DomainError("no b >= 0 reproduces c = " + std::to_string(c)
                          + " through the one-node constraint (minimum c = "
                          + std::to_string(std::sqrt(cmin2)) + ")");
    // Quadratic in b from squaring the constraint; only the smaller root
    // satisfies the unsquared relation, the larger one belongs to the
    // nodeless companion branch.
    const double Q = (1.0 + lp) * (3.0 + lp) / ((2.0 + lp) * (2.0 + lp));
    const double X = cmin2 / (c * c);
    const double R = 1.0 + (X - 1.0) * Q;
    if (R < 0)
        throw DomainError("negative inner radicand in the b(c) relation");
    const double prefactor = 2.0 * k * (2.0 + lp) * c / ((1.0 + lp) * (3.0 + lp));
    const double b = prefactor * (1.0 - std::sqrt(R));
    return std::max(b, 0.0); // clip the 1e-12 guard band at the boundary
}

NodeSet solve_nodes(int n, int l, const PotentialParams& p)
{
    const AnsatzExponents e = ansatz_exponents(p, l);
    if (n == 0) {
        NodeSet ns;
        ns.n = 0;
        return ns;
    }
    const GammaSolve gs = solve_gamma(n, e.alpha, e.beta, e.delta);
    return gs.nodes;
}

AnalyticSolution solve_level(QuantumNumbers qn, double a, double b, double d, double m,
                             UnitSystem units)
{
    AnalyticSolution sol;
    sol.qn = qn;
    PotentialParams base(a, b, 0.0, d, m, units);
    sol.exponents = ansatz_exponents(base, qn.l);

    if (qn.n == 0) {
        sol.poly = {1.0};
        sol.nodes.n = 0;
        sol.params = base.with_c(constrain_c(0, qn.l, a, b, d, m, units));
    } else {
        GammaSolve gs = solve_gamma(qn.n, sol.exponents.alpha, sol.exponents.beta,
                                    sol.exponents.delta);
        sol.poly = std::move(gs.poly);
        sol.nodes = std::move(gs.nodes);
        sol.params = base.with_c(
            unscale_energy(2.0 * sol.exponents.beta * sol.exponents.delta + gs.gamma, m, units));
    }
    sol.energy = energy_closed_form(qn, sol.params);
    sol.residuals = validate_constraint(sol);
    return sol;
}

ConstraintDiagnostics validate_constraint(const AnalyticSolution& sol)
{
    ConstraintDiagnostics diag;
    const int n = sol.qn.n;
    const AnsatzExponents& e = sol.exponents;
    const ScaledParams sp = scale(sol.params, sol.energy);
    const double gamma = sp.c1 - 2.0 * e.beta * e.delta;
    const std::vector<double>& p = sol.poly;
    diag.complex_roots = !sol.nodes.all_real;

    // full coefficient system, j = 0..n+1
    for (int j = 0; j <= n + 1; ++j) {
        const double pj = (j <= n) ? p[j] : 0.0;
        const double pj1 = (j + 1 <= n) ? p[j + 1] : 0.0;
        const double pjm1 = (j >= 1 && j - 1 <= n) ? p[j - 1] : 0.0;
        const double t1 = (j + 1.0) * (j + 2.0 * e.delta) * pj1;
        const double t2 = 2.0 * e.alpha * (n + 1.0 - j) * pjm1;
        const double t3 = (gamma - 2.0 * e.beta * j) * pj;
        const double mag = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-30});
        diag.matching_residual =
            std::max(diag.matching_residual, relative_residual(t1 + t2 + t3, mag));
    }

    // energy relation eps = alpha (1 + 2(delta+n)) - beta^2
    {
        const double lhs = sp.eps;
        const double rhs = e.alpha * (1.0 + 2.0 * (e.delta + n)) - e.beta * e.beta;
        diag.matching_residual = std::max(
            diag.matching_residual,
            relative_residual(lhs - rhs, std::max(std::abs(lhs), std::abs(rhs))));
    }

    // hand-written level systems (kept as independent regression checks)
    const auto rel = [&](double lhs, double rhs) {
        diag.level_relation_residual =
            std::max(diag.level_relation_residual,
                     relative_residual(lhs - rhs, std::max({std::abs(lhs), std::abs(rhs), 1e-30})));
    };
    const auto& sym = sol.nodes.sym;
    const double a1 = sp.a1, b1 = sp.b1, c1 = sp.c1;
    const double al = e.alpha, be = e.beta, de = e.delta;
    rel(al, std::sqrt(a1));
    rel(be, b1 / (2.0 * std::sqrt(a1)));
    if (n == 0) {
        rel(c1, 2.0 * be * de);
    } else if (n == 1) {
        const double x1 = sym[0];
        rel(c1 - 2.0 * be * (de + 1.0), 2.0 * al * x1);
        rel((c1 - 2.0 * be * de) * x1, 2.0 * de);
        rel(al * x1 * x1 + be * x1, de);
    } else if (n == 2) {
        const double e1 = sym[0], e2 = sym[1];
        rel(c1 - 2.0 * be * (de + 2.0), 2.0 * al * e1);
        rel((c1 - 2.0 * be * de) * e2, 2.0 * de * e1);
        rel((c1 - 2.0 * be * (de + 1.0)) * e1, 4.0 * al * e2 + 2.0 * (2.0 * de + 1.0));
        const double sum_sq = e1 * e1 - 2.0 * e2;
        rel(al * sum_sq + be * e1, 2.0 * de + 1.0);
        rel(de * sum_sq, (be * e1 + 1.0) * e2 + 2.0 * al * e2 * e2);
    } else if (n == 3) {
        const double e1 = sym[0], e2 = sym[1], e3 = sym[2];
        rel(c1 - 2.0 * be * (de + 3.0), 2.0 * al * e1);
        rel((c1 - 2.0 * be * de) * e3, 2.0 * de * e2);
        rel((c1 - 2.0 * be * (de + 2.0)) * e1, 4.0 * al * e2 + 3.0 * (2.0 * de + 2.0));
        const double sum_sq = e1 * e1 - 2.0 * e2;
        rel(al * sum_sq + be * e1, 3.0 * (de + 1.0));
    }
    return diag;
}

} // namespace cmph
