#include "cmph/units.hpp"

#include <algorithm>

#include "cmph/errors.hpp"

namespace cmph {

double hbar(UnitSystem us)
{
    switch (us) {
    case UnitSystem::natural: return 1.0;
    case UnitSystem::ev_nm:
    case UnitSystem::ev_fm:   return constants::hbar_ev_s;
    }
    throw DomainError("unknown unit system");
}

double light_speed(UnitSystem us)
{
    switch (us) {
    case UnitSystem::ev_nm: return constants::c_nm_per_s;
    case UnitSystem::ev_fm: return constants::c_fm_per_s;
    case UnitSystem::natural:
        throw DomainError("light_speed is not defined in natural units");
    }
    throw DomainError("unknown unit system");
}

double electron_mass(UnitSystem us)
{
    if (us == UnitSystem::natural)
        return 1.0;
    const double c = light_speed(us);
    return constants::me_c2_ev / (c * c); // eV.s^2/length^2
}

const char* unit_label(UnitSystem us)
{
    switch (us) {
    case UnitSystem::natural: return "natural";
    case UnitSystem::ev_nm:   return "ev-nm";
    case UnitSystem::ev_fm:   return "ev-fm";
    }
    return "?";
}

const char* length_label(UnitSystem us)
{
    switch (us) {
    case UnitSystem::natural: return "1";
    case UnitSystem::ev_nm:   return "nm";
    case UnitSystem::ev_fm:   return "fm";
    }
    return "?";
}

const char* energy_label(UnitSystem us)
{
    return us == UnitSystem::natural ? "1" : "eV";
}

UnitSystem parse_units(const std::string& s)
{
    std::string t = s;
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "natural") return UnitSystem::natural;
    if (t == "ev-nm")   return UnitSystem::ev_nm;
    if (t == "ev-fm")   return UnitSystem::ev_fm;
    throw DomainError("unknown unit system '" + s + "' (expected natural, ev-nm or ev-fm)");
}

} // namespace cmph
