#pragma once

#include <cmath>
#include <stdexcept>

namespace f2ent {

/// Internal unit system: energies in meV, lengths in nm, times in fs.
namespace constants {

/// Reduced Planck constant, meV fs.
inline constexpr double hbar = 658.2119569;

/// Speed of light, nm/fs.
inline constexpr double speed_of_light = 299.792458;

/// Free-electron rest energy, meV.
inline constexpr double electron_rest_energy = 510998.95000e3;

/// Free-electron mass, meV fs^2 / nm^2.
inline constexpr double electron_mass =
    electron_rest_energy / (speed_of_light * speed_of_light);

/// Coulomb coupling e^2/(4 pi eps0) in vacuum, meV nm.
inline constexpr double coulomb_vacuum = 1439.964548;

}  // namespace constants

/// Material and unit bundle for an effective-mass electron gas.
struct UnitSystem {
  double hbar = constants::hbar;     ///< meV fs
  double effective_mass = 1.0;       ///< units of the free-electron mass
  double dielectric_const = 1.0;     ///< relative permittivity
  double coulomb_scale = constants::coulomb_vacuum;  ///< e^2/(4 pi eps0 eps_r), meV nm

  /// Particle mass in meV fs^2 / nm^2.
  double mass() const { return effective_mass * constants::electron_mass; }

  /// hbar^2 / (2 m), meV nm^2.
  double kinetic_factor() const { return hbar * hbar / (2.0 * mass()); }

  void validate() const {
    if (!(hbar > 0.0) || !(effective_mass > 0.0) || !(dielectric_const > 0.0) ||
        !(coulomb_scale > 0.0)) {
      throw std::invalid_argument("UnitSystem: all fields must be positive");
    }
    const double expected = constants::coulomb_vacuum / dielectric_const;
    if (std::abs(coulomb_scale - expected) > 1e-12 * expected) {
      throw std::invalid_argument(
          "UnitSystem: coulomb_scale inconsistent with dielectric_const");
    }
  }
};

/// GaAs conduction-band parameters (m* = 0.067 m_e, eps_r = 12.9).
inline UnitSystem make_gaas_units() {
  UnitSystem u;
  u.effective_mass = 0.067;
  u.dielectric_const = 12.9;
  u.coulomb_scale = constants::coulomb_vacuum / u.dielectric_const;
  return u;
}

}  // namespace f2ent
