#include "polaron/core/basis.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "polaron/error.hpp"

namespace polaron::core {

namespace {

constexpr std::size_t kBuiltinCap = 2'000'000;

std::size_t saturating_mul(std::size_t a, std::size_t b)
{
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
    }
    return a * b;
}

}  // namespace

std::size_t default_dimension_cap()
{
    if (const char* env = std::getenv("POLARON_DIM_CAP")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw ValidationError(std::string("POLARON_DIM_CAP is not a positive integer: ") + env);
    }
    return kBuiltinCap;
}

std::size_t TruncationSpec::levels(std::size_t mode) const
{
    const std::size_t d = per_mode.empty() ? fock_dim : per_mode.at(mode);
    require(d >= 1, "Fock truncation must keep at least one level");
    return d;
}

std::size_t hilbert_dimension(Sector sector, std::size_t n_sites,
                              std::span<const std::size_t> fock_dims)
{
    std::size_t dim = 1;
    if (sector == Sector::single_excitation) {
        dim = n_sites;
    } else {
        for (std::size_t i = 0; i < n_sites; ++i) dim = saturating_mul(dim, 2);
    }
    for (std::size_t d : fock_dims) dim = saturating_mul(dim, d);
    return dim;
}

BasisDescriptor::BasisDescriptor(Sector sector, std::size_t n_sites,
                                 std::vector<std::size_t> oscillator_site,
                                 std::vector<std::size_t> fock_dims)
    : sector_(sector)
    , n_sites_(n_sites)
    , oscillator_site_(std::move(oscillator_site))
    , fock_dims_(std::move(fock_dims))
{
    require(n_sites >= 1, "basis needs at least one site");
    require(oscillator_site_.size() == fock_dims_.size(), "one Fock dimension per oscillator");
    require(sector == Sector::single_excitation || n_sites < 63, "too many qubits");
    electronic_dim_ = sector == Sector::single_excitation ? n_sites : (std::size_t{1} << n_sites);
    strides_.assign(fock_dims_.size(), 1);
    bath_dim_ = 1;
    for (std::size_t j = fock_dims_.size(); j-- > 0;) {
        require(fock_dims_[j] >= 1, "Fock truncation must keep at least one level");
        require(oscillator_site_[j] < n_sites, "oscillator attached to unknown site");
        strides_[j] = bath_dim_;
        bath_dim_ = saturating_mul(bath_dim_, fock_dims_[j]);
    }
}

std::size_t BasisDescriptor::index(std::size_t electronic, std::span<const std::size_t> occupation) const
{
    require(electronic < electronic_dim_, "electronic index out of range");
    require(occupation.size() == fock_dims_.size(), "occupation vector has wrong length");
    std::size_t bath = 0;
    for (std::size_t j = 0; j < occupation.size(); ++j) {
        require(occupation[j] < fock_dims_[j], "occupation exceeds Fock truncation");
        bath += occupation[j] * strides_[j];
    }
    return electronic * bath_dim_ + bath;
}

std::vector<std::size_t> BasisDescriptor::occupation_of(std::size_t index) const
{
    std::size_t bath = bath_of(index);
    std::vector<std::size_t> occ(fock_dims_.size());
    for (std::size_t j = 0; j < occ.size(); ++j) {
        occ[j] = bath / strides_[j];
        bath %= strides_[j];
    }
    return occ;
}

bool BasisDescriptor::excited(std::size_t electronic, std::size_t site) const
{
    if (sector_ == Sector::single_excitation) return electronic == site;
    return (electronic >> (n_sites_ - 1 - site)) & 1U;
}

std::size_t BasisDescriptor::single_excitation_state(std::size_t site) const
{
    require(site < n_sites_, "site index out of range");
    if (sector_ == Sector::single_excitation) return site;
    return std::size_t{1} << (n_sites_ - 1 - site);
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const
{
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(matrix.nonZeros()));
    for (Eigen::Index r = 0; r < matrix.outerSize(); ++r) {
        for (SparseMatrix::InnerIterator it(matrix, r); it; ++it) {
            out.push_back({static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()),
                           it.value()});
        }
    }
    return out;
}

double SparseOperator::hermiticity_defect() const
{
    const SparseMatrix diff = matrix - SparseMatrix(matrix.adjoint());
    double worst = 0.0;
    for (Eigen::Index r = 0; r < diff.outerSize(); ++r) {
        for (SparseMatrix::InnerIterator it(diff, r); it; ++it) {
            worst = std::max(worst, std::abs(it.value()));
        }
    }
    return worst;
}

}  // namespace polaron::core
