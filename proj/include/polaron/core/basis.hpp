#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Sparse>

namespace polaron::core {

enum class Sector {
    single_excitation,  // electronic basis |n>, one excited site
    full_two_level,     // 2^N qubit register, qubit 1 most significant bit
};

/// Largest admissible Hilbert dimension; POLARON_DIM_CAP overrides the
/// built-in 2'000'000.
std::size_t default_dimension_cap();

struct TruncationSpec {
    std::size_t fock_dim = 8;             // levels per mode when per_mode is empty
    std::vector<std::size_t> per_mode;    // optional explicit levels, one per oscillator
    Sector sector = Sector::single_excitation;
    std::size_t dim_cap = default_dimension_cap();

    std::size_t levels(std::size_t mode) const;
};

/// Index <-> physical-state map: electronic index slowest, then oscillators
/// in the order given (for models: site-major, then k).
class BasisDescriptor {
public:
    BasisDescriptor() = default;
    BasisDescriptor(Sector sector, std::size_t n_sites, std::vector<std::size_t> oscillator_site,
                    std::vector<std::size_t> fock_dims);

    Sector sector() const { return sector_; }
    std::size_t n_sites() const { return n_sites_; }
    std::size_t n_oscillators() const { return fock_dims_.size(); }
    std::size_t electronic_dim() const { return electronic_dim_; }
    std::size_t bath_dim() const { return bath_dim_; }
    std::size_t dim() const { return electronic_dim_ * bath_dim_; }
    const std::vector<std::size_t>& fock_dims() const { return fock_dims_; }
    const std::vector<std::size_t>& oscillator_site() const { return oscillator_site_; }

    /// Stride of oscillator j inside the bath index.
    std::size_t stride(std::size_t oscillator) const { return strides_[oscillator]; }

    std::size_t index(std::size_t electronic, std::span<const std::size_t> occupation) const;
    std::size_t electronic_of(std::size_t index) const { return index / bath_dim_; }
    std::size_t bath_of(std::size_t index) const { return index % bath_dim_; }
    std::vector<std::size_t> occupation_of(std::size_t index) const;

    /// Whether `site` is excited in electronic state `electronic`.
    bool excited(std::size_t electronic, std::size_t site) const;

    /// Electronic index of "only `site` excited".
    std::size_t single_excitation_state(std::size_t site) const;

private:
    Sector sector_ = Sector::single_excitation;
    std::size_t n_sites_ = 0;
    std::vector<std::size_t> oscillator_site_;
    std::vector<std::size_t> fock_dims_;
    std::vector<std::size_t> strides_;
    std::size_t electronic_dim_ = 0;
    std::size_t bath_dim_ = 1;
};

/// Dimension of a sector with the given oscillator levels, saturating at
/// SIZE_MAX instead of overflowing.
std::size_t hilbert_dimension(Sector sector, std::size_t n_sites,
                              std::span<const std::size_t> fock_dims);

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using StateVector = Eigen::VectorXcd;

struct SparseOperator {
    SparseMatrix matrix;
    BasisDescriptor basis;
    bool hamiltonian = true;

    std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }

    struct Entry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };
    std::vector<Entry> entries() const;

    /// max |H_ij - conj(H_ji)|
    double hermiticity_defect() const;
};

inline constexpr double kHermitianTolerance = 1e-12;

}  // namespace polaron::core
