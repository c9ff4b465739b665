#pragma once

#include <cstddef>
#include <span>

namespace polaron::dynamics {

struct RwaReport {
    double max_population_deviation = 0.0;
    std::size_t worst_initial_state = 0;  // register index, qubit 1 most significant
    double worst_time = 0.0;
};

/// Two identical qubits (splitting Delta) coupled either by the full
/// g sx sx or by its rotating-wave part (g/2)(sx sx + sy sy). Both are
/// propagated exactly from each computational basis state; the result is the
/// largest single-qubit population difference over states, qubits and times.
///
/// Single-excitation preparations see no difference at all (sx sx keeps
/// {|01>, |10>} invariant); the deviation comes from the |00> <-> |11>
/// counter-rotating channel.
RwaReport rwa_analysis(double g, double delta, std::span<const double> times);

inline double rwa_error(double g, double delta, std::span<const double> times)
{
    return rwa_analysis(g, delta, times).max_population_deviation;
}

}  // namespace polaron::dynamics
