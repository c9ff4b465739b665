#pragma once

#include <cstddef>
#include <vector>

#include "polaron/core/assemble.hpp"
#include "polaron/dynamics/propagate.hpp"

namespace polaron::dynamics {

struct SpectrumOptions {
    // n_omega == 0 selects the Nyquist band -1/(2 dt) .. 1/(2 dt) at a
    // spacing of 1/(4 t_max).
    double omega_min = 0.0;
    double omega_max = 0.0;
    std::size_t n_omega = 0;
    PropagationOptions propagation{};
};

struct AbsorptionSpectrum {
    std::vector<double> times;
    std::vector<Complex> correlation;  // <mu(t) mu(0)>
    std::vector<double> omega;
    std::vector<double> intensity;

    /// Windowed, normalised transform at one frequency: an isolated line of
    /// weight w shows up with height w.
    double line_intensity(double omega) const;
};

/// Dipole autocorrelation from the electronic ground state with the bath in
/// its vacuum (energy zero), propagated in the single-excitation manifold
/// with the site constants C_n restored so that lines sit at absolute
/// transition frequencies. The transform uses a cos^2 taper that vanishes at
/// t_max.
AbsorptionSpectrum absorption_spectrum(const core::GeneralizedHolsteinModel& model,
                                       const core::TruncationSpec& trunc, const std::vector<double>& dipoles,
                                       double t_max, double dt, const SpectrumOptions& options = {});

}  // namespace polaron::dynamics
