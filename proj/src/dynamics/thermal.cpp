#include "polaron/dynamics/thermal.hpp"

#include <cmath>
#include <random>

#include "polaron/dynamics/observables.hpp"
#include "polaron/error.hpp"
#include "polaron/units.hpp"

namespace polaron::dynamics {

double bose_occupation(double omega, double temperature)
{
    require(temperature >= 0.0, "temperature must be non-negative");
    require(omega > 0.0, "mode frequency must be positive");
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / units::thermal_energy_ghz(temperature));
}

std::vector<double> gibbs_populations(double omega, double temperature, std::size_t levels)
{
    require(temperature >= 0.0, "temperature must be non-negative");
    require(levels >= 1, "need at least one level");
    std::vector<double> p(levels, 0.0);
    if (temperature == 0.0) {
        p[0] = 1.0;
        return p;
    }
    const double x = omega / units::thermal_energy_ghz(temperature);
    double total = 0.0;
    for (std::size_t n = 0; n < levels; ++n) {
        p[n] = std::exp(-x * static_cast<double>(n));
        total += p[n];
    }
    for (double& v : p) v /= total;
    return p;
}

namespace {

// 53-bit uniform in [0, 1); identical on every platform for a given seed.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t draw(const std::vector<double>& p, std::mt19937_64& rng)
{
    const double u = uniform(rng);
    double acc = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        acc += p[n];
        if (u < acc) return n;
    }
    return p.size() - 1;
}

}  // namespace

ThermalEnsemble thermal_initial_state(const core::GeneralizedHolsteinModel& model,
                                      const core::TruncationSpec& trunc, double temperature,
                                      std::size_t initial_site, std::size_t n_samples, std::uint64_t seed)
{
    require(temperature >= 0.0, "temperature must be non-negative");
    require(initial_site < model.n_sites(), "initial site out of range");
    const core::OscillatorNetwork net = core::network_of(model);
    ThermalEnsemble ens;
    ens.basis = core::make_basis(net, trunc);
    const auto& dims = ens.basis.fock_dims();

    if (temperature == 0.0) {
        ThermalSample s;
        s.occupation.assign(dims.size(), 0);
        s.state = site_excitation(ens.basis, initial_site);
        s.weight = 1.0;
        ens.samples.push_back(std::move(s));
        return ens;
    }
    require(n_samples >= 1, "need at least one thermal sample");
    std::vector<std::vector<double>> weights;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        weights.push_back(gibbs_populations(net.oscillators[j].omega, temperature, dims[j]));
    }
    Eigen::VectorXcd el = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ens.basis.electronic_dim()));
    el(static_cast<Eigen::Index>(ens.basis.single_excitation_state(initial_site))) = 1.0;

    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < n_samples; ++k) {
        ThermalSample s;
        for (const auto& w : weights) s.occupation.push_back(draw(w, rng));
        s.state = product_state(ens.basis, el, s.occupation);
        s.weight = 1.0 / static_cast<double>(n_samples);
        ens.samples.push_back(std::move(s));
    }
    return ens;
}

Trajectory propagate_ensemble(const core::SparseOperator& hamiltonian, const ThermalEnsemble& ensemble,
                              std::span<const double> times, const PropagationOptions& options)
{
    require(!ensemble.samples.empty(), "empty ensemble");
    PropagationOptions opt = options;
    opt.keep_states = false;
    Trajectory avg;
    for (const ThermalSample& s : ensemble.samples) {
        const Trajectory t = propagate(hamiltonian, s.state, times, opt);
        if (avg.times.empty()) {
            avg.times = t.times;
            avg.populations.assign(t.populations.size(), std::vector<double>(t.populations[0].size(), 0.0));
            if (opt.keep_reduced) avg.reduced.assign(t.reduced.size(), Eigen::MatrixXcd::Zero(t.reduced[0].rows(), t.reduced[0].cols()));
        }
        for (std::size_t i = 0; i < t.populations.size(); ++i) {
            for (std::size_t n = 0; n < t.populations[i].size(); ++n) avg.populations[i][n] += s.weight * t.populations[i][n];
            if (opt.keep_reduced) avg.reduced[i] += s.weight * t.reduced[i];
        }
    }
    return avg;
}

}  // namespace polaron::dynamics
