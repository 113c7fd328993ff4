#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cmph/potential.hpp"

namespace cmph {

// Spherical-quantum-dot preset: an electron of effective mass 0.05 m_e in a
// pseudoharmonic confinement of angular frequency omega (Hz), eV-based
// units. The harmonic strength is a = m omega^2 / 2.
struct QDotPreset {
    double mass_me = 0.05;              // effective mass in electron masses
    double omega = 1e15;                // angular frequency, 1/s
    UnitSystem units = UnitSystem::ev_nm;

    double mass() const;                // eV.s^2/length^2
    double pho_strength() const;        // a = m omega^2/2
    double hbar_omega() const;          // eV
};

// Ground-state electron energy as a function of omega with c treated as a
// free knob (the linear coefficient b implied by the ground-state constraint
// always exists, so this value is an exact eigenvalue):
//   E_0l = (2 + l') hbar omega / 2 - 2 m c^2 / (hbar^2 (1+l')^2).
double ground_energy_vs_omega(const QDotPreset& preset, int l, double c, double d);

// First-excited-state formula with c free, evaluated directly:
//   E_1l = (4 + l') hbar omega / 2 - prefactor * [1 + sqrt(...)]^2 * m c^2/hbar^2.
double excited_energy_vs_omega(const QDotPreset& preset, int l, double c, double d);

// Same quantity through the alternative route: the b implied by the
// one-node inversion with the plus-branch bracket, then
// E = (4+l') hbar omega/2 - b^2/(2 m omega^2). Agrees with
// excited_energy_vs_omega to rounding; kept as an algebraic cross-check.
double excited_energy_via_b(const QDotPreset& preset, int l, double c, double d);

// The b >= 0 given c in the omega parameterization (plus branch, the one
// the direct excited-state formula is built from).
double pho_b_from_c(const QDotPreset& preset, int l, double c, double d);

// E_1l - E_0l = hbar omega exactly on the pseudoharmonic branch (b = 0),
// independent of l and d.
double level_spacing_pho(const QDotPreset& preset);

struct SweepSpec {
    enum class Variable { omega, c };
    enum class Quantity { E0, E1, psi0 };
    Variable variable = Variable::omega;
    double lo = 0, hi = 0;
    int points = 0;
    int l = 0;
    double fixed_c = 0;     // used when variable == omega
    double fixed_omega = 0; // used when variable == c
    double d = 0;
    Quantity quantity = Quantity::E0;
};

struct SweepRow {
    double x = 0;
    std::string quantity;
    double value = 0;
    std::string units_label;
    bool constraint_satisfied = false;
    std::string error; // empty on success; failed rows do not abort the run
};

// Evaluates the sweep point by point, in input order, deterministically.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const QDotPreset& preset);

// CSV with header "x,quantity,value,units,constraint_satisfied,error",
// floating point at 12 significant digits.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

const char* quantity_name(SweepSpec::Quantity q);

} // namespace cmph
