#include "polaron/core/kron.hpp"

#include <cmath>

#include "polaron/error.hpp"

namespace polaron::core::kron {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseMatrix from_triplets(std::size_t dim, const std::vector<Triplet>& t)
{
    SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

}  // namespace

SparseMatrix identity(std::size_t dim)
{
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < dim; ++i) t.emplace_back(i, i, 1.0);
    return from_triplets(dim, t);
}

SparseMatrix sigma_x() { return from_triplets(2, {{0, 1, 1.0}, {1, 0, 1.0}}); }
SparseMatrix sigma_y() { return from_triplets(2, {{0, 1, Complex(0, -1)}, {1, 0, Complex(0, 1)}}); }
SparseMatrix sigma_z() { return from_triplets(2, {{0, 0, -1.0}, {1, 1, 1.0}}); }
SparseMatrix sigma_plus() { return from_triplets(2, {{1, 0, 1.0}}); }
SparseMatrix sigma_minus() { return from_triplets(2, {{0, 1, 1.0}}); }
SparseMatrix number_qubit() { return from_triplets(2, {{1, 1, 1.0}}); }

SparseMatrix annihilation(std::size_t levels)
{
    std::vector<Triplet> t;
    for (std::size_t n = 1; n < levels; ++n) t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
    return from_triplets(levels, t);
}

SparseMatrix creation(std::size_t levels) { return SparseMatrix(annihilation(levels).adjoint()); }

SparseMatrix number(std::size_t levels)
{
    std::vector<Triplet> t;
    for (std::size_t n = 1; n < levels; ++n) t.emplace_back(n, n, static_cast<double>(n));
    return from_triplets(levels, t);
}

SparseMatrix product(const SparseMatrix& a, const SparseMatrix& b)
{
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (Eigen::Index ra = 0; ra < a.outerSize(); ++ra) {
        for (SparseMatrix::InnerIterator ia(a, ra); ia; ++ia) {
            for (Eigen::Index rb = 0; rb < b.outerSize(); ++rb) {
                for (SparseMatrix::InnerIterator ib(b, rb); ib; ++ib) {
                    t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                                   ia.value() * ib.value());
                }
            }
        }
    }
    SparseMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

Register::Register(std::size_t n_qubits, std::vector<std::size_t> fock_dims)
    : n_qubits_(n_qubits)
{
    local_dims_.assign(n_qubits, 2);
    for (std::size_t d : fock_dims) {
        require(d >= 1, "Fock truncation must keep at least one level");
        local_dims_.push_back(d);
        bath_dim_ *= d;
    }
    for (std::size_t d : local_dims_) dim_ *= d;
}

SparseMatrix Register::embed(std::size_t slot, const SparseMatrix& local) const
{
    std::size_t before = 1;
    std::size_t after = 1;
    for (std::size_t s = 0; s < slot; ++s) before *= local_dims_[s];
    for (std::size_t s = slot + 1; s < local_dims_.size(); ++s) after *= local_dims_[s];
    return product(product(identity(before), local), identity(after));
}

SparseMatrix Register::qubit(std::size_t q, const SparseMatrix& local) const
{
    require(q < n_qubits_, "qubit index out of range");
    return embed(q, local);
}

SparseMatrix Register::mode(std::size_t j, const SparseMatrix& local) const
{
    require(n_qubits_ + j < local_dims_.size(), "oscillator index out of range");
    return embed(n_qubits_ + j, local);
}

std::vector<std::size_t> Register::single_excitation_indices() const
{
    std::vector<std::size_t> out;
    out.reserve(n_qubits_ * bath_dim_);
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        const std::size_t bits = std::size_t{1} << (n_qubits_ - 1 - q);
        for (std::size_t b = 0; b < bath_dim_; ++b) out.push_back(bits * bath_dim_ + b);
    }
    return out;
}

SparseMatrix restrict_to(const SparseMatrix& full, std::span<const std::size_t> indices)
{
    std::vector<long> position(static_cast<std::size_t>(full.rows()), -1);
    for (std::size_t i = 0; i < indices.size(); ++i) position[indices[i]] = static_cast<long>(i);
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (SparseMatrix::InnerIterator it(full, static_cast<Eigen::Index>(indices[i])); it; ++it) {
            const long c = position[static_cast<std::size_t>(it.col())];
            if (c >= 0) t.emplace_back(i, c, it.value());
        }
    }
    SparseMatrix m(static_cast<Eigen::Index>(indices.size()), static_cast<Eigen::Index>(indices.size()));
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

}  // namespace polaron::core::kron
