#include "polaron/dynamics/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polaron/dynamics/observables.hpp"
#include "polaron/error.hpp"
#include "polaron/units.hpp"

namespace polaron::dynamics {

KrylovPropagator::KrylovPropagator(const core::SparseMatrix& hamiltonian, PropagationOptions options)
    : h_(hamiltonian)
    , opt_(options)
{
    require(opt_.krylov_dim >= 2, "Krylov dimension must be at least 2");
    require(opt_.tolerance > 0.0, "Krylov tolerance must be positive");
}

void KrylovPropagator::advance(StateVector& psi, double dt)
{
    require(dt >= 0.0, "cannot propagate backwards");
    const auto n = static_cast<Eigen::Index>(psi.size());
    const Eigen::Index m_max = std::min<Eigen::Index>(static_cast<Eigen::Index>(opt_.krylov_dim), n);

    double remaining = dt;
    while (remaining > 0.0) {
        const double beta0 = psi.norm();
        if (beta0 == 0.0) return;

        // Lanczos with full reorthogonalization
        Eigen::MatrixXcd v(n, m_max);
        std::vector<double> alpha;
        std::vector<double> beta;
        v.col(0) = psi / beta0;
        double scale = 0.0;
        double residual = 0.0;  // beta_m, zero on happy breakdown
        Eigen::Index m = 0;
        for (Eigen::Index j = 0; j < m_max; ++j) {
            StateVector w = h_ * v.col(j);
            const double a = std::real(v.col(j).dot(w));
            alpha.push_back(a);
            w -= a * v.col(j);
            if (j > 0) w -= beta.back() * v.col(j - 1);
            for (int pass = 0; pass < 2; ++pass) {
                const Eigen::VectorXcd proj = v.leftCols(j + 1).adjoint() * w;
                w -= v.leftCols(j + 1) * proj;
            }
            const double b = w.norm();
            scale = std::max({scale, std::abs(a), b});
            m = j + 1;
            if (b <= 1e-13 * std::max(1.0, scale)) {
                residual = 0.0;
                break;
            }
            residual = b;
            if (j + 1 < m_max) {
                beta.push_back(b);
                v.col(j + 1) = w / b;
            }
        }
        // m == n without breakdown means the space is complete
        if (m == n) residual = 0.0;

        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index j = 0; j < m; ++j) {
            t(j, j) = alpha[static_cast<std::size_t>(j)];
            if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta[static_cast<std::size_t>(j)];
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
        const Eigen::VectorXd first = eig.eigenvectors().row(0).transpose();

        auto coefficients = [&](double tau) {
            Eigen::VectorXcd phases(m);
            for (Eigen::Index k = 0; k < m; ++k) {
                phases(k) = std::polar(first(k), -units::kTwoPi * tau * eig.eigenvalues()(k));
            }
            return Eigen::VectorXcd(eig.eigenvectors().cast<Complex>() * phases);
        };

        double tau = remaining;
        if (last_tau_ > 0.0) tau = std::min(remaining, 2.0 * last_tau_);
        Eigen::VectorXcd c = coefficients(tau);
        double err = beta0 * residual * std::abs(c(m - 1));
        while (err > opt_.tolerance) {
            const double shrink = 0.9 * std::pow(opt_.tolerance / err, 1.0 / static_cast<double>(m));
            tau *= std::clamp(shrink, 0.1, 0.9);
            c = coefficients(tau);
            err = beta0 * residual * std::abs(c(m - 1));
        }
        psi = beta0 * (v.leftCols(m) * c);
        max_error_ = std::max(max_error_, err);
        ++substeps_;
        if (tau < remaining) last_tau_ = tau;
        remaining -= tau;
        if (remaining <= 1e-15 * dt) break;
    }
}

namespace {

void check_inputs(const SparseOperator& h, const StateVector& psi0, std::span<const double> times)
{
    require(h.matrix.rows() == h.matrix.cols(), "Hamiltonian must be square");
    require(static_cast<std::size_t>(psi0.size()) == h.dim(),
            "state dimension " + std::to_string(psi0.size()) + " does not match operator dimension " +
                std::to_string(h.dim()));
    const double defect = h.hermiticity_defect();
    require(defect < core::kHermitianTolerance,
            "Hamiltonian is not Hermitian (defect " + std::to_string(defect) + ")");
    require(!times.empty(), "empty time grid");
    require(times.front() >= 0.0, "time grid must start at t >= 0");
    for (std::size_t i = 1; i < times.size(); ++i) {
        require(times[i] > times[i - 1], "time grid must be strictly increasing");
    }
}

void record(Trajectory& traj, const core::BasisDescriptor& basis, double t, const StateVector& psi,
            const PropagationOptions& opt)
{
    const Eigen::MatrixXcd rho = reduced_electronic(basis, psi);
    traj.times.push_back(t);
    traj.populations.push_back(site_populations(basis, rho));
    if (opt.keep_reduced) traj.reduced.push_back(rho);
    if (opt.keep_states) traj.states.push_back(psi);
}

}  // namespace

Trajectory propagate(const SparseOperator& hamiltonian, const StateVector& psi0,
                     std::span<const double> times, const PropagationOptions& options)
{
    check_inputs(hamiltonian, psi0, times);
    KrylovPropagator stepper(hamiltonian.matrix, options);
    Trajectory traj;
    StateVector psi = psi0;
    double now = 0.0;
    for (double t : times) {
        stepper.advance(psi, t - now);
        now = t;
        record(traj, hamiltonian.basis, t, psi, options);
    }
    return traj;
}

Trajectory dense_oracle(const SparseOperator& hamiltonian, const StateVector& psi0,
                        std::span<const double> times, const PropagationOptions& options)
{
    require(hamiltonian.dim() <= kDenseOracleMaxDim,
            "dense oracle limited to dimension " + std::to_string(kDenseOracleMaxDim));
    check_inputs(hamiltonian, psi0, times);
    const Eigen::MatrixXcd dense(hamiltonian.matrix);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense);
    const Eigen::VectorXcd coeff = eig.eigenvectors().adjoint() * psi0;
    Trajectory traj;
    for (double t : times) {
        Eigen::VectorXcd phased(coeff.size());
        for (Eigen::Index k = 0; k < coeff.size(); ++k) {
            phased(k) = coeff(k) * std::polar(1.0, -units::kTwoPi * eig.eigenvalues()(k) * t);
        }
        const StateVector psi = eig.eigenvectors() * phased;
        record(traj, hamiltonian.basis, t, psi, options);
    }
    return traj;
}

std::vector<double> time_grid(double t_max, double dt)
{
    require(dt > 0.0 && t_max >= 0.0, "time grid needs dt > 0 and t_max >= 0");
    const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
    std::vector<double> grid(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) grid[i] = static_cast<double>(i) * dt;
    return grid;
}

}  // namespace polaron::dynamics
