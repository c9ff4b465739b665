#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "polaron/core/basis.hpp"
#include "polaron/core/model.hpp"

namespace polaron::core {

/// Electronic sites dressed by a network of harmonic oscillators:
///
///   H = sum_{n<m} J_nm (sx_n sx_m + sy_n sy_m)/2 + sum_n e_n P_n
///     + sum_j [ kappa_j sz_{site(j)} (b_j^+ + b_j) + omega_j b_j^+ b_j ]
///     + sum_links t_ab (b_a^+ b_b + b_b^+ b_a)
///
/// with P_n the projector onto "site n excited" and sz_n = 2 P_n - 1.
/// A plain multi-mode model has no links; a chain bath has kappa only on the
/// chain heads.
struct OscillatorNetwork {
    struct Oscillator {
        std::size_t site = 0;
        double omega = 0.0;
        double kappa = 0.0;
    };
    struct Link {
        std::size_t a = 0;
        std::size_t b = 0;
        double coupling = 0.0;
    };

    Eigen::MatrixXd coupling;         // J_nm, symmetric, zero diagonal
    std::vector<double> site_energy;  // e_n, empty means all zero
    std::vector<Oscillator> oscillators;
    std::vector<Link> links;

    std::size_t n_sites() const { return static_cast<std::size_t>(coupling.rows()); }
};

/// Star network of a model: every mode couples directly to its site.
/// Offsets C_n are not included.
OscillatorNetwork network_of(const GeneralizedHolsteinModel& model);

BasisDescriptor make_basis(const OscillatorNetwork& network, const TruncationSpec& trunc);

/// Throws DimensionError when the sector exceeds trunc.dim_cap.
SparseOperator assemble(const OscillatorNetwork& network, const TruncationSpec& trunc);

SparseOperator assemble_hamiltonian(const GeneralizedHolsteinModel& model, const TruncationSpec& trunc);

/// Electronic excitation number sum_n P_n on the same basis.
SparseOperator excitation_number(const BasisDescriptor& basis);

}  // namespace polaron::core
