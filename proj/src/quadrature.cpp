#include "cmph/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "cmph/errors.hpp"

namespace cmph {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Abscissae/weights from the usual QUADPACK tables.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double result_gauss = 0, result_kronrod = 0, result_abs = 0;

    const double fc = f(center);
    result_kronrod = fc * wgk[7];
    result_gauss = fc * wg[3];
    result_abs = std::abs(result_kronrod);

    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        result_kronrod += wgk[j] * (f1 + f2);
        if (j % 2 == 1) // even Kronrod indices are the Gauss points
            result_gauss += wg[j / 2] * (f1 + f2);
        result_abs += wgk[j] * (std::abs(f1) + std::abs(f2));
    }
    const double value = result_kronrod * half;
    double err = std::abs((result_kronrod - result_gauss) * half);
    // QUADPACK-style error sharpening
    const double abs_int = result_abs * std::abs(half);
    if (abs_int > 0 && err > 0)
        err = abs_int * std::min(1.0, std::pow(200.0 * err / abs_int, 1.5));
    return {a, b, value, err};
}

QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureSpec& spec)
{
    std::priority_queue<Panel> queue;
    Panel p0 = gk15(f, a, b);
    double total = p0.value, total_err = p0.error;
    queue.push(p0);
    int subdivisions = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions)
            throw QuadratureFailure("adaptive quadrature exhausted its subdivision budget",
                                    total, total_err);
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureFailure("panel collapsed below floating-point resolution",
                                    total, total_err);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }
    return {total, total_err, subdivisions};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec)
{
    if (!(a < b))
        throw DomainError("integration requires a < b");
    if (std::isinf(b)) {
        // Truncate the tail with geometrically growing panels; stop once two
        // consecutive panel contributions are below the tolerance share.
        double width = std::max(1.0, std::abs(a));
        double edge = a;
        QuadratureResult total;
        QuadratureSpec panel_spec = spec;
        int quiet = 0;
        for (int k = 0; k < 64 && quiet < 2; ++k) {
            QuadratureResult part = integrate_finite(f, edge, edge + width, panel_spec);
            total.value += part.value;
            total.error_estimate += part.error_estimate;
            total.subdivisions += part.subdivisions;
            const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total.value));
            quiet = (std::abs(part.value) < 0.25 * tol) ? quiet + 1 : 0;
            edge += width;
            width *= 2.0;
            panel_spec.abs_tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total.value)) / 8.0;
        }
        if (quiet < 2)
            throw QuadratureFailure("semi-infinite tail did not decay within the panel budget",
                                    total.value, total.error_estimate);
        return total;
    }
    return integrate_finite(f, a, b, spec);
}

} // namespace cmph
