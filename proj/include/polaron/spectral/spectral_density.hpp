#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "polaron/core/model.hpp"

namespace polaron::spectral {

enum class Kind {
    discrete_modes,      // delta lines, value = kappa_k^2 in GHz^2
    sampled_continuous,  // J(omega) in GHz, piecewise linear between samples
};

struct Sample {
    double omega = 0.0;
    double value = 0.0;
};

class SpectralDensity {
public:
    /// Validates: omega > 0 strictly increasing, values >= 0.
    SpectralDensity(Kind kind, std::vector<Sample> samples);

    Kind kind() const { return kind_; }
    const std::vector<Sample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

    /// J at omega (piecewise-linear, zero outside the sampled range).
    /// Only meaningful for sampled densities.
    double operator()(double omega) const;

private:
    Kind kind_;
    std::vector<Sample> samples_;
};

/// C(omega, T) on a signed frequency grid (-omega_max .. 0 .. omega_max).
struct ThermalSpectralDensity {
    double temperature = 0.0;  // K
    std::vector<Sample> samples;
};

struct ModeEntry {
    double omega = 0.0;  // GHz
    double kappa = 0.0;  // GHz
};

/// Bath modes of a single site.
struct ModeSet {
    std::vector<ModeEntry> modes;

    std::size_t size() const { return modes.size(); }
    void validate() const;
    /// sum kappa^2 / omega
    double reorganization_energy() const;
};

enum class Discretization { direct, equal_weight, linear_grid };

/// Two-column CSV with one of the headers
///   omega_ghz,value_ghz | wavenumber_cm1,value_cm1      (sampled J)
///   omega_ghz,kappa_ghz | wavenumber_cm1,kappa_cm1      (discrete lines)
SpectralDensity load_csv(const std::filesystem::path& path);
SpectralDensity parse_csv(const std::string& text);

/// 1 + coth(h omega / 2 k_B T) for omega != 0, evaluated without cancellation.
double thermal_factor(double omega, double temperature);

ThermalSpectralDensity thermal_transform(const SpectralDensity& density, double temperature);
std::string thermal_csv(const ThermalSpectralDensity& thermal);

ModeSet rescale(const ModeSet& modes, double t_source, double t_target);
core::GeneralizedHolsteinModel rescale(const core::GeneralizedHolsteinModel& model, double t_source,
                                       double t_target);

/// Continuous: integral of J/omega; discrete: sum kappa^2/omega.
double reorganization_energy(const SpectralDensity& density);
/// Integral of J over [a, b] of the piecewise-linear interpolant.
double integrate(const SpectralDensity& density, double a, double b);
/// Integral of J/omega over [a, b].
double integrate_over_omega(const SpectralDensity& density, double a, double b);

/// Bins a sampled density into modes with kappa^2 = integral J and
/// omega = integral J / integral (J/omega), so both the total weight and the
/// reorganization energy carry over bin by bin. Discrete input passes
/// through under `direct`.
ModeSet to_mode_set(const SpectralDensity& density, std::size_t n_modes, Discretization scheme);

}  // namespace polaron::spectral
