#include "cmph/specfun.hpp"

#include <cmath>
#include <string>

#include "cmph/errors.hpp"

namespace cmph {
namespace {

// Lanczos g = 7, n = 9 coefficients (Godfrey's set).
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

} // namespace

double gamma_pos(double x)
{
    if (!(x > 0))
        throw DomainError("gamma_pos requires x > 0");
    // Reduce to x >= 1 via Gamma(x) = Gamma(x+1)/x for accuracy near 0.
    if (x < 1.0)
        return gamma_pos(x + 1.0) / x;
    const double z = x - 1.0;
    double series = lanczos_c[0];
    for (int i = 1; i < 9; ++i)
        series += lanczos_c[i] / (z + i);
    const double t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

double pcf_D(double nu, double z)
{
    if (nu > 0)
        throw DomainError("pcf_D is implemented for nu <= 0 only");
    if (z < 0)
        throw DomainError("pcf_D is implemented for z >= 0 only");
    if (nu == 0.0)
        return std::exp(-z * z / 4.0);

    const double s = -nu; // > 0, integrand power is t^{s-1}
    // Series panel [0, t0] with h(t) = exp(-t^2/2 - z t) = sum c_k t^k:
    //   h' = -(t + z) h  =>  (k+1) c_{k+1} = -(z c_k + c_{k-1}).
    // t0 is chosen so the scaled coefficients decay factorially.
    const double t0 = std::min(1.0, 1.0 / std::max(1.0, z));
    double c_prev = 0.0, c_curr = 1.0; // c_{-1}, c_0
    double tk = std::pow(t0, s);       // t0^{s+k}
    double head = c_curr * tk / s;
    for (int k = 1; k <= 200; ++k) {
        const double c_next = -(z * c_curr + c_prev) / k;
        c_prev = c_curr;
        c_curr = c_next;
        tk *= t0;
        const double term = c_curr * tk / (s + k);
        head += term;
        if (std::abs(term) < 1e-17 * std::abs(head) && k > 8)
            break;
    }

    const auto integrand = [s, z](double t) {
        return std::pow(t, s - 1.0) * std::exp(-0.5 * t * t - z * t);
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-16 * std::max(1.0, head);
    const double tail = integrate(integrand, t0, infinity, spec).value;

    return std::exp(-z * z / 4.0) / gamma_pos(s) * (head + tail);
}

double gaussian_power_integral(double nu, double p, double q)
{
    if (!(nu > 0) || !(p > 0) || q < 0)
        throw DomainError("gaussian_power_integral requires nu > 0, p > 0, q >= 0");
    const double root2p = std::sqrt(2.0 * p);
    return std::pow(root2p, -nu) * gamma_pos(nu) * std::exp(q * q / (8.0 * p))
           * pcf_D(-nu, q / root2p);
}

} // namespace cmph
