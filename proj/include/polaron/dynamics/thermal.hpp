#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polaron/core/assemble.hpp"
#include "polaron/dynamics/propagate.hpp"

namespace polaron::dynamics {

/// Bose-Einstein mean occupation; 0 at T = 0.
double bose_occupation(double omega, double temperature);

/// Gibbs weights of levels 0..levels-1, renormalised on the truncated ladder.
std::vector<double> gibbs_populations(double omega, double temperature, std::size_t levels);

struct ThermalSample {
    core::StateVector state;
    std::vector<std::size_t> occupation;
    double weight = 0.0;
};

/// Pure-state unravelling of an initial Gibbs bath: each sample is a Fock
/// product state drawn from the per-mode Boltzmann distribution, with equal
/// weights. At T = 0 a single vacuum sample of weight one is returned.
struct ThermalEnsemble {
    std::vector<ThermalSample> samples;
    core::BasisDescriptor basis;
};

ThermalEnsemble thermal_initial_state(const core::GeneralizedHolsteinModel& model,
                                      const core::TruncationSpec& trunc, double temperature,
                                      std::size_t initial_site, std::size_t n_samples, std::uint64_t seed);

/// Weighted average of per-sample trajectories (populations only).
Trajectory propagate_ensemble(const core::SparseOperator& hamiltonian, const ThermalEnsemble& ensemble,
                              std::span<const double> times, const PropagationOptions& options = {});

}  // namespace polaron::dynamics
