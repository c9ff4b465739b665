#include "polaron/core/jordan_wigner.hpp"

#include <string>

#include "polaron/core/kron.hpp"
#include "polaron/error.hpp"

namespace polaron::core {

std::pair<SparseMatrix, SparseMatrix> jordan_wigner_pair(const HolsteinModel& model,
                                                         const TruncationSpec& trunc)
{
    model.validate();
    require(trunc.sector == Sector::single_excitation,
            "Jordan-Wigner check is defined on the single-excitation sector");
    const std::size_t n = model.n_sites();
    std::vector<std::size_t> dims(n);
    for (std::size_t i = 0; i < n; ++i) dims[i] = trunc.levels(i);
    const std::size_t sector_dim = hilbert_dimension(Sector::single_excitation, n, dims);
    const std::size_t full_dim = hilbert_dimension(Sector::full_two_level, n, dims);
    if (full_dim > trunc.dim_cap) {
        throw DimensionError("register dimension " + std::to_string(full_dim) + " (sector " +
                             std::to_string(sector_dim) + ") exceeds cap " +
                             std::to_string(trunc.dim_cap));
    }

    const kron::Register reg(n, dims);
    const SparseMatrix id = kron::identity(reg.dim());

    // a_n = prod_{j<n} (1 - 2 n_j) sigma-_n
    std::vector<SparseMatrix> annihilate(n);
    for (std::size_t site = 0; site < n; ++site) {
        SparseMatrix op = reg.qubit(site, kron::sigma_minus());
        for (std::size_t j = 0; j < site; ++j) {
            op = SparseMatrix(SparseMatrix(id - 2.0 * reg.qubit(j, kron::number_qubit())) * op);
        }
        annihilate[site] = std::move(op);
    }

    SparseMatrix fermionic(reg.dim(), reg.dim());
    SparseMatrix spin(reg.dim(), reg.dim());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const SparseMatrix hop = annihilate[i].adjoint() * annihilate[i + 1];
        fermionic += model.hop[i] * SparseMatrix(hop + SparseMatrix(hop.adjoint()));
        const SparseMatrix xx = reg.qubit(i, kron::sigma_x()) * reg.qubit(i + 1, kron::sigma_x());
        const SparseMatrix yy = reg.qubit(i, kron::sigma_y()) * reg.qubit(i + 1, kron::sigma_y());
        spin += 0.5 * model.hop[i] * SparseMatrix(xx + yy);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const SparseMatrix displacement =
            reg.mode(i, kron::creation(dims[i])) + reg.mode(i, kron::annihilation(dims[i]));
        const SparseMatrix phonon = model.mode_freq[i] * reg.mode(i, kron::number(dims[i]));
        const SparseMatrix occupation = annihilate[i].adjoint() * annihilate[i];
        fermionic += model.mode_coupling[i] * SparseMatrix(SparseMatrix(2.0 * occupation - id) * displacement);
        fermionic += phonon;
        spin += model.mode_coupling[i] * SparseMatrix(reg.qubit(i, kron::sigma_z()) * displacement);
        spin += phonon;
    }

    const auto sector = reg.single_excitation_indices();
    return {kron::restrict_to(fermionic, sector), kron::restrict_to(spin, sector)};
}

JordanWignerReport jordan_wigner_check(const HolsteinModel& model, const TruncationSpec& trunc)
{
    const auto [fermionic, spin] = jordan_wigner_pair(model, trunc);
    const Eigen::MatrixXcd diff = Eigen::MatrixXcd(spin) - Eigen::MatrixXcd(fermionic);
    JordanWignerReport report;
    report.offset = diff.diagonal().real().mean();
    Eigen::MatrixXcd aligned = diff;
    aligned.diagonal().array() -= report.offset;
    report.max_abs_deviation = aligned.cwiseAbs().maxCoeff();
    return report;
}

}  // namespace polaron::core
