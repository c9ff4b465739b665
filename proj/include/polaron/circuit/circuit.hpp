#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polaron/bath/chain.hpp"
#include "polaron/core/basis.hpp"
#include "polaron/core/model.hpp"

namespace polaron::circuit {

inline constexpr double kDefaultTunnelSplitting = 5.0;  // GHz

struct Qubit {
    double delta = kDefaultTunnelSplitting;  // tunnel splitting, GHz
    double bias = 0.0;                       // energy bias, GHz; 0 at the optimal point
};

struct QubitCoupling {
    std::size_t i = 0;
    std::size_t j = 0;
    double g = 0.0;  // GHz
};

/// LC resonator attached to `qubit`. Star-form modes are chains of length
/// one; `position` 0 is the oscillator that couples to the qubit.
struct Oscillator {
    std::size_t qubit = 0;
    double omega_prime = 0.0;  // GHz
    double eta = 0.0;          // GHz
    std::size_t chain = 0;
    std::size_t position = 0;
};

struct OscillatorLink {
    std::size_t a = 0;
    std::size_t b = 0;
    double coupling = 0.0;  // GHz
};

struct CircuitDesign {
    std::vector<Qubit> qubits;
    std::vector<QubitCoupling> couplings;
    std::vector<Oscillator> oscillators;
    std::vector<OscillatorLink> links;

    void validate() const;
};

/// g <- J_nm for connected pairs, eta <- kappa, omega' <- omega; with a
/// chain bath per site, eta is the head coupling and chain links become
/// oscillator links. Delta is uniform.
CircuitDesign compile(const core::GeneralizedHolsteinModel& model, double delta = kDefaultTunnelSplitting);
CircuitDesign compile(const core::GeneralizedHolsteinModel& model, std::span<const bath::ChainBath> site_baths,
                      double delta = kDefaultTunnelSplitting);

struct OscillatorHardware {
    double beta = 0.1;                  // inductive division ratio
    double persistent_current_na = 50;  // I_p
    double impedance_ohm = 100;         // Z_r

    void validate() const;
};

/// sqrt(R) = kappa / omega = 5.48 beta (I_p / 50 nA) (Z_r / 100 Ohm)^{1/2} (f / 1 GHz)^{-1},
/// with f the ordinary resonator frequency in GHz.
double coupling_ratio(const OscillatorHardware& hw, double frequency_ghz);

/// beta needed to reach `sqrt_huang_rhys` at frequency f with the given
/// I_p and Z_r (the beta field of `hw` is ignored).
double required_beta(const OscillatorHardware& hw, double frequency_ghz, double sqrt_huang_rhys);

struct Limits {
    double g_min = 0.0;      // GHz
    double g_max = 1.0;      // GHz
    double eta_max = 10.0;   // GHz, strict
    double beta_max = 0.2;   // "far below 1"
    double z_max = 100.0;    // Ohm
};

struct Check {
    std::string name;     // "g range", "eta range", "beta", "impedance", "required beta"
    std::string subject;  // e.g. "coupling 1-2", "oscillator 3"
    double value = 0.0;
    double margin = 0.0;  // distance to the nearest bound, negative when violated
    bool pass = false;
};

struct FeasibilityReport {
    std::vector<Check> checks;
    bool pass = true;

    std::vector<std::string> violated() const;
};

/// One OscillatorHardware per design oscillator.
FeasibilityReport check_feasibility(const CircuitDesign& design, std::span<const OscillatorHardware> hardware,
                                    const Limits& limits = {});

/// Simulator Hamiltonian in the qubit energy eigenbasis,
///   sum g (sx sx + sy sy)/2 + sum [Delta/2 sz + eta sz (c^+ + c) + omega' c^+ c] + links,
/// built from explicit Pauli/ladder tensor products on the full register and
/// then restricted to the requested sector. Nonzero bias is rejected.
core::SparseOperator circuit_hamiltonian(const CircuitDesign& design, const core::TruncationSpec& trunc);

}  // namespace polaron::circuit
