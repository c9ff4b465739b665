#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "polaron/core/basis.hpp"

namespace polaron::dynamics {

using core::Complex;
using core::SparseOperator;
using core::StateVector;

struct PropagationOptions {
    double tolerance = 1e-10;      // local error bound per Krylov step
    std::size_t krylov_dim = 30;
    bool keep_states = false;
    bool keep_reduced = false;     // electronic reduced density matrices
};

/// Populations are "site n excited" probabilities; in the single-excitation
/// sector they sum to one.
struct Trajectory {
    std::vector<double> times;                       // ns
    std::vector<std::vector<double>> populations;    // [time][site]
    std::vector<Eigen::MatrixXcd> reduced;           // optional
    std::vector<StateVector> states;                 // optional
};

/// exp(-2 pi i H dt) applied through short-iteration Lanczos with an
/// a-posteriori error estimate; substeps shrink until each stays below the
/// tolerance.
class KrylovPropagator {
public:
    KrylovPropagator(const core::SparseMatrix& hamiltonian, PropagationOptions options = {});

    void advance(StateVector& psi, double dt);

    std::size_t substeps() const { return substeps_; }
    /// Largest error estimate accepted so far.
    double max_error_estimate() const { return max_error_; }

private:
    const core::SparseMatrix& h_;
    PropagationOptions opt_;
    double last_tau_ = 0.0;
    std::size_t substeps_ = 0;
    double max_error_ = 0.0;
};

/// Throws on non-Hermitian H, dimension mismatch or a time grid that is not
/// strictly increasing from t >= 0. psi0 is taken at t = 0.
Trajectory propagate(const SparseOperator& hamiltonian, const StateVector& psi0,
                     std::span<const double> times, const PropagationOptions& options = {});

inline constexpr std::size_t kDenseOracleMaxDim = 4096;

/// Full eigendecomposition; reference for small systems.
Trajectory dense_oracle(const SparseOperator& hamiltonian, const StateVector& psi0,
                        std::span<const double> times, const PropagationOptions& options = {});

/// Evenly spaced grid 0, dt, ..., t_max (t_max included within rounding).
std::vector<double> time_grid(double t_max, double dt);

}  // namespace polaron::dynamics
