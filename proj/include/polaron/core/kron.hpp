#pragma once

// Explicit tensor-product construction on a qubit register followed by
// harmonic oscillators. Slow but literal; used where an operator identity is
// checked against the direct sector assembly.

#include <cstddef>
#include <span>
#include <vector>

#include "polaron/core/basis.hpp"

namespace polaron::core::kron {

// Local qubit basis: |0> ground, |1> excited; sz = diag(-1, +1).
SparseMatrix identity(std::size_t dim);
SparseMatrix sigma_x();
SparseMatrix sigma_y();
SparseMatrix sigma_z();
SparseMatrix sigma_plus();   // |1><0|
SparseMatrix sigma_minus();  // |0><1|
SparseMatrix number_qubit(); // |1><1|
SparseMatrix annihilation(std::size_t levels);
SparseMatrix creation(std::size_t levels);
SparseMatrix number(std::size_t levels);

SparseMatrix product(const SparseMatrix& a, const SparseMatrix& b);

/// Register of n_qubits two-level systems followed by oscillators with the
/// given level counts. Qubit 1 is the slowest index.
class Register {
public:
    Register(std::size_t n_qubits, std::vector<std::size_t> fock_dims);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }
    std::size_t bath_dim() const { return bath_dim_; }

    /// Local operator on qubit q (0-based), identity elsewhere.
    SparseMatrix qubit(std::size_t q, const SparseMatrix& local) const;
    /// Local operator on oscillator j (0-based), identity elsewhere.
    SparseMatrix mode(std::size_t j, const SparseMatrix& local) const;

    /// Rows/cols with exactly one excited qubit, ordered by site, bath index
    /// fastest. Matches Sector::single_excitation ordering.
    std::vector<std::size_t> single_excitation_indices() const;

private:
    SparseMatrix embed(std::size_t slot, const SparseMatrix& local) const;

    std::size_t n_qubits_;
    std::vector<std::size_t> local_dims_;
    std::size_t dim_ = 1;
    std::size_t bath_dim_ = 1;
};

SparseMatrix restrict_to(const SparseMatrix& full, std::span<const std::size_t> indices);

}  // namespace polaron::core::kron
