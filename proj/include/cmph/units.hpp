#pragma once

#include <string>

namespace cmph {

// Unit systems supported by the solver. "natural" fixes hbar = 1 and leaves
// the mass unit to the caller (typically m = 1). The eV-based systems express
// energies in eV, time in s, and lengths in nm or fm; hbar is then fixed to
// 6.5821e-16 eV.s and masses are in eV.s^2/length^2.
enum class UnitSystem { natural, ev_nm, ev_fm };

namespace constants {
inline constexpr double hbar_ev_s     = 6.5821e-16;    // eV.s
inline constexpr double me_c2_ev      = 0.510998950e6; // electron mass, CODATA
inline constexpr double c_nm_per_s    = 2.99792458e17;
inline constexpr double c_fm_per_s    = 2.99792458e23;
} // namespace constants

// hbar in the given system's energy*time unit.
double hbar(UnitSystem us);

// Speed of light in (length unit)/s; not defined for natural units.
double light_speed(UnitSystem us);

// Electron mass in the system's mass unit (eV.s^2/length^2 for the eV
// systems, 1 for natural where the mass unit is the particle itself).
double electron_mass(UnitSystem us);

const char* unit_label(UnitSystem us);
const char* length_label(UnitSystem us);
const char* energy_label(UnitSystem us);

// Parses "natural", "ev-nm", "ev-fm" (also accepts '_' for '-').
UnitSystem parse_units(const std::string& s);

} // namespace cmph
