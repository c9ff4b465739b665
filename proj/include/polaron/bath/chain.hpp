#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "polaron/core/assemble.hpp"
#include "polaron/spectral/spectral_density.hpp"

namespace polaron::bath {

using spectral::ModeSet;

/// Nearest-neighbour chain of oscillators; only the first one (the head)
/// couples to the qubit.
struct Chain {
    double head_coupling = 0.0;         // GHz
    std::vector<double> site_freq;      // GHz, length L
    std::vector<double> link_coupling;  // GHz, length L-1
    bool truncated = false;             // Lanczos terminated early
    std::size_t dropped_modes = 0;      // star modes left decoupled

    std::size_t length() const { return site_freq.size(); }
    Eigen::MatrixXd tridiagonal() const;
};

struct ChainBath {
    std::vector<Chain> chains;

    std::size_t oscillator_count() const;
    std::size_t max_length() const;
};

enum class PartitionStrategy {
    round_robin,  // frequency-sorted, mode i of the sorted list goes to chain i mod n
    contiguous,   // frequency-sorted slices
};

/// Ties in frequency keep input order. Chain lengths differ by at most one.
std::vector<ModeSet> partition(const ModeSet& modes, std::size_t n_chains,
                               PartitionStrategy strategy = PartitionStrategy::round_robin);

/// Lanczos tridiagonalisation of diag(omega) from the start vector kappa/|kappa|
/// with full reorthogonalisation. A breakdown (beta_j < 1e-12 |omega|) ends
/// the chain and sets `truncated`.
Chain star_to_chain(const ModeSet& modes);

/// Householder reduction of the same problem: reflect kappa onto e_1, then
/// tridiagonalise while keeping e_1 fixed. Never truncates; links are |beta|.
Chain householder_chain(const ModeSet& modes);

ChainBath transform(const ModeSet& modes, std::size_t n_chains,
                    PartitionStrategy strategy = PartitionStrategy::round_robin);

/// m_p = sum_k kappa_k^2 omega_k^p
double star_moment(const ModeSet& modes, int p);
/// m_p = head^2 (T^p)_{00}
double chain_moment(const Chain& chain, int p);

nlohmann::json to_json(const ChainBath& bath);
ChainBath chain_bath_from_json(const nlohmann::json& doc);

/// Sites coupled by `coupling`; each site's bath given as a ChainBath.
core::OscillatorNetwork chain_network(const Eigen::MatrixXd& coupling, std::span<const ChainBath> site_baths);

struct EquivalenceOptions {
    bool use_dense_oracle = true;       // falls back to Krylov above the oracle limit
    std::size_t n_chains = 1;
};

/// One qubit dressed by its modes in star form and in chain form, prepared
/// in (|0> + |1>)/sqrt(2) with the bath in vacuum and evolved in the full
/// two-level space. Returns the largest trace distance between the two
/// reduced qubit states over `times`.
double chain_dynamics_equivalence(const core::GeneralizedHolsteinModel& model, const core::TruncationSpec& trunc,
                                  std::span<const double> times, const EquivalenceOptions& options = {});

}  // namespace polaron::bath
