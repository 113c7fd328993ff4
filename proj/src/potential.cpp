#include "cmph/potential.hpp"

#include <cmath>
#include <string>

#include "cmph/errors.hpp"

namespace cmph {

QuantumNumbers::QuantumNumbers(int n, int l) : n(n), l(l)
{
    if (n < 0 || l < 0)
        throw DomainError("quantum numbers require n >= 0 and l >= 0");
}

PotentialParams::PotentialParams(double a, double b, double c, double d, double m,
                                 UnitSystem units)
    : a(a), b(b), c(c), d(d), m(m), units(units)
{
    if (!(a > 0))
        throw DomainError("harmonic coefficient a must be positive");
    if (b < 0)
        throw DomainError("linear coefficient b must be non-negative");
    if (!(m > 0))
        throw DomainError("mass must be positive");
}

double PotentialParams::evaluate(double r) const
{
    if (!(r > 0))
        throw DomainError("potential is defined for r > 0");
    return a * r * r + b * r - c / r - d / (r * r);
}

PotentialParams PotentialParams::with_c(double c_new) const
{
    PotentialParams q = *this;
    q.c = c_new;
    return q;
}

double d_bound(int l, double m, UnitSystem units)
{
    const double hb = hbar(units);
    const double tl = 2.0 * l + 1.0;
    return tl * tl * hb * hb / (8.0 * m);
}

double lprime(int l, double d, double m, UnitSystem units)
{
    if (l < 0)
        throw DomainError("l must be non-negative");
    const double hb = hbar(units);
    const double tl = 2.0 * l + 1.0;
    const double radicand = tl * tl - 8.0 * m * d / (hb * hb);
    if (radicand < 0)
        throw DomainError("d = " + std::to_string(d) + " exceeds the bound (2l+1)^2 hbar^2/(8m) = "
                          + std::to_string(d_bound(l, m, units)) + " for l = " + std::to_string(l));
    return std::sqrt(radicand);
}

ScaledParams scale(const PotentialParams& p, double energy)
{
    const double hb = hbar(p.units);
    const double f = 2.0 * p.m / (hb * hb);
    return {f * energy, f * p.a, f * p.b, f * p.c, f * p.d};
}

double unscale_energy(double eps, double m, UnitSystem units)
{
    const double hb = hbar(units);
    return eps * hb * hb / (2.0 * m);
}

PotentialParams convert(const PotentialParams& p, UnitSystem target)
{
    if (p.units == target)
        return p;
    if (p.units == UnitSystem::natural || target == UnitSystem::natural)
        throw DomainError("conversion to/from natural units needs to_natural/from_natural");
    // nm -> fm multiplies lengths by 1e6
    const double L = (p.units == UnitSystem::ev_nm) ? 1e6 : 1e-6;
    PotentialParams q;
    q.a = p.a / (L * L);
    q.b = p.b / L;
    q.c = p.c * L;
    q.d = p.d * L * L;
    q.m = p.m / (L * L); // eV.s^2/length^2
    q.units = target;
    return q;
}

NaturalizedParams to_natural(const PotentialParams& p)
{
    NaturalizedParams np;
    np.source = p.units;
    np.mass_scale = p.m;
    if (p.units == UnitSystem::natural) {
        np.params = p;
        return np;
    }
    const double hb = hbar(p.units);
    np.length_scale = 1.0;                                      // keep the native length unit
    np.energy_scale = hb * hb / (p.m * np.length_scale * np.length_scale);
    PotentialParams q;
    q.a = p.a * np.length_scale * np.length_scale / np.energy_scale;
    q.b = p.b * np.length_scale / np.energy_scale;
    q.c = p.c / (np.energy_scale * np.length_scale);
    q.d = p.d / (np.energy_scale * np.length_scale * np.length_scale);
    q.m = 1.0;
    q.units = UnitSystem::natural;
    np.params = q;
    return np;
}

PotentialParams from_natural(const NaturalizedParams& np)
{
    if (np.source == UnitSystem::natural)
        return np.params;
    const PotentialParams& q = np.params;
    PotentialParams p;
    p.a = q.a * np.energy_scale / (np.length_scale * np.length_scale);
    p.b = q.b * np.energy_scale / np.length_scale;
    p.c = q.c * np.energy_scale * np.length_scale;
    p.d = q.d * np.energy_scale * np.length_scale * np.length_scale;
    p.m = np.mass_scale;
    p.units = np.source;
    return p;
}

void require_same_units(UnitSystem a, UnitSystem b, const char* where)
{
    if (a != b)
        throw DomainError(std::string("mixed unit systems in ") + where);
}

} // namespace cmph
