#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "polaron/core/basis.hpp"

namespace polaron::dynamics {

/// Tr_bath |psi><psi| over the electronic index.
Eigen::MatrixXcd reduced_electronic(const core::BasisDescriptor& basis, const core::StateVector& psi);

std::vector<double> site_populations(const core::BasisDescriptor& basis, const Eigen::MatrixXcd& reduced);
std::vector<double> site_populations(const core::BasisDescriptor& basis, const core::StateVector& psi);

/// 1/2 sum |eig(a - b)| for Hermitian a, b.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// <psi|H|psi>
double energy(const core::SparseOperator& hamiltonian, const core::StateVector& psi);

/// Electronic amplitudes (length electronic_dim) times the bath Fock state
/// given by `occupation` (empty = vacuum).
core::StateVector product_state(const core::BasisDescriptor& basis, const Eigen::VectorXcd& electronic,
                                std::span<const std::size_t> occupation = {});

/// Site `site` excited, bath in vacuum.
core::StateVector site_excitation(const core::BasisDescriptor& basis, std::size_t site);

/// Mean occupation <b_j^+ b_j> of every oscillator.
std::vector<double> mode_occupations(const core::BasisDescriptor& basis, const core::StateVector& psi);

}  // namespace polaron::dynamics
