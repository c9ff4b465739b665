#pragma once

// Energies are ordinary frequencies in GHz (h = 1), times in ns, so a phase
// accumulates as 2*pi*E*t.

#include <numbers>

namespace polaron::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// k_B / h in GHz per kelvin.
inline constexpr double kBoltzmannGHzPerK = 20.836619;

/// 1 cm^-1 expressed in GHz.
inline constexpr double kGHzPerWavenumber = 29.9792458;

constexpr double thermal_energy_ghz(double kelvin) { return kBoltzmannGHzPerK * kelvin; }
constexpr double wavenumber_to_ghz(double cm1) { return cm1 * kGHzPerWavenumber; }
constexpr double ghz_to_wavenumber(double ghz) { return ghz / kGHzPerWavenumber; }

}  // namespace polaron::units
