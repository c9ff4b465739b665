#include "polaron/dynamics/observables.hpp"

#include <cmath>

#include "polaron/error.hpp"

namespace polaron::dynamics {

Eigen::MatrixXcd reduced_electronic(const core::BasisDescriptor& basis, const core::StateVector& psi)
{
    require(static_cast<std::size_t>(psi.size()) == basis.dim(), "state does not match basis");
    using RowMajor = Eigen::Matrix<core::Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> amp(psi.data(), static_cast<Eigen::Index>(basis.electronic_dim()),
                                         static_cast<Eigen::Index>(basis.bath_dim()));
    return amp * amp.adjoint();
}

std::vector<double> site_populations(const core::BasisDescriptor& basis, const Eigen::MatrixXcd& reduced)
{
    std::vector<double> pop(basis.n_sites(), 0.0);
    for (std::size_t e = 0; e < basis.electronic_dim(); ++e) {
        const double p = std::real(reduced(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(e)));
        for (std::size_t n = 0; n < basis.n_sites(); ++n) {
            if (basis.excited(e, n)) pop[n] += p;
        }
    }
    return pop;
}

std::vector<double> site_populations(const core::BasisDescriptor& basis, const core::StateVector& psi)
{
    return site_populations(basis, reduced_electronic(basis, psi));
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "trace distance of mismatched matrices");
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

double energy(const core::SparseOperator& hamiltonian, const core::StateVector& psi)
{
    return std::real(psi.dot(hamiltonian.matrix * psi));
}

core::StateVector product_state(const core::BasisDescriptor& basis, const Eigen::VectorXcd& electronic,
                                std::span<const std::size_t> occupation)
{
    require(static_cast<std::size_t>(electronic.size()) == basis.electronic_dim(),
            "electronic amplitudes do not match the sector");
    std::vector<std::size_t> vacuum(basis.n_oscillators(), 0);
    const std::span<const std::size_t> occ = occupation.empty() ? std::span<const std::size_t>(vacuum) : occupation;
    core::StateVector psi = core::StateVector::Zero(static_cast<Eigen::Index>(basis.dim()));
    for (std::size_t e = 0; e < basis.electronic_dim(); ++e) {
        psi(static_cast<Eigen::Index>(basis.index(e, occ))) = electronic(static_cast<Eigen::Index>(e));
    }
    return psi;
}

core::StateVector site_excitation(const core::BasisDescriptor& basis, std::size_t site)
{
    Eigen::VectorXcd el = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.electronic_dim()));
    el(static_cast<Eigen::Index>(basis.single_excitation_state(site))) = 1.0;
    return product_state(basis, el);
}

std::vector<double> mode_occupations(const core::BasisDescriptor& basis, const core::StateVector& psi)
{
    std::vector<double> occ(basis.n_oscillators(), 0.0);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const double p = std::norm(psi(static_cast<Eigen::Index>(i)));
        if (p == 0.0) continue;
        const auto n = basis.occupation_of(i);
        for (std::size_t j = 0; j < n.size(); ++j) occ[j] += p * static_cast<double>(n[j]);
    }
    return occ;
}

}  // namespace polaron::dynamics
