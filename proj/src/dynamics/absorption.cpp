#include "polaron/dynamics/absorption.hpp"

#include <cmath>
#include <numbers>

#include "polaron/dynamics/observables.hpp"
#include "polaron/error.hpp"
#include "polaron/units.hpp"

namespace polaron::dynamics {

namespace {

// trapezoid weight times cos^2 taper, normalised to unit sum
std::vector<double> window(const std::vector<double>& times)
{
    const std::size_t n = times.size();
    require(n >= 2, "correlation function needs at least two samples");
    const double t_max = times.back();
    std::vector<double> w(n);
    double norm = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double c = std::cos(0.5 * std::numbers::pi * times[k] / t_max);
        w[k] = ((k == 0 || k + 1 == n) ? 0.5 : 1.0) * c * c;
        norm += w[k];
    }
    for (double& x : w) x /= norm;
    return w;
}

double transform(const std::vector<double>& times, const std::vector<Complex>& corr,
                 const std::vector<double>& w, double omega)
{
    Complex acc = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        acc += w[k] * corr[k] * std::polar(1.0, units::kTwoPi * omega * times[k]);
    }
    return std::real(acc);
}

}  // namespace

double AbsorptionSpectrum::line_intensity(double omega) const
{
    return transform(times, correlation, window(times), omega);
}

AbsorptionSpectrum absorption_spectrum(const core::GeneralizedHolsteinModel& model,
                                       const core::TruncationSpec& trunc, const std::vector<double>& dipoles,
                                       double t_max, double dt, const SpectrumOptions& options)
{
    require(trunc.sector == core::Sector::single_excitation,
            "absorption spectra are computed in the single-excitation manifold");
    require(dipoles.size() == model.n_sites(), "one dipole amplitude per site required");
    require(t_max > 0.0 && dt > 0.0 && dt < t_max, "need 0 < dt < t_max");

    core::OscillatorNetwork net = core::network_of(model);
    net.site_energy.resize(model.n_sites());
    for (std::size_t n = 0; n < model.n_sites(); ++n) net.site_energy[n] = model.offset(n);
    const core::SparseOperator h = core::assemble(net, trunc);

    Eigen::VectorXcd mu(static_cast<Eigen::Index>(model.n_sites()));
    for (std::size_t n = 0; n < dipoles.size(); ++n) mu(static_cast<Eigen::Index>(n)) = dipoles[n];
    const double weight = mu.squaredNorm();
    require(weight > 0.0, "dipole vector is zero");
    const StateVector phi0 = product_state(h.basis, mu / std::sqrt(weight));

    AbsorptionSpectrum out;
    out.times = time_grid(t_max, dt);
    KrylovPropagator stepper(h.matrix, options.propagation);
    StateVector psi = phi0;
    double now = 0.0;
    for (double t : out.times) {
        stepper.advance(psi, t - now);
        now = t;
        out.correlation.push_back(weight * phi0.dot(psi));
    }

    double lo = options.omega_min;
    double hi = options.omega_max;
    std::size_t count = options.n_omega;
    if (count == 0) {
        lo = -0.5 / dt;
        hi = 0.5 / dt;
        count = static_cast<std::size_t>(std::ceil((hi - lo) * 4.0 * t_max)) + 1;
    }
    require(count >= 1 && hi >= lo, "invalid frequency window");
    const std::vector<double> taper = window(out.times);
    for (std::size_t i = 0; i < count; ++i) {
        const double w = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        out.omega.push_back(w);
        out.intensity.push_back(transform(out.times, out.correlation, taper, w));
    }
    return out;
}

}  // namespace polaron::dynamics
