#include "polaron/core/assemble.hpp"

#include <cmath>
#include <string>

#include "polaron/error.hpp"

namespace polaron::core {

namespace {

using Triplet = Eigen::Triplet<Complex>;

void check_network(const OscillatorNetwork& net)
{
    const std::size_t n = net.n_sites();
    require(n >= 1, "network needs at least one site");
    require(net.coupling.cols() == net.coupling.rows(), "coupling matrix must be square");
    require(net.site_energy.empty() || net.site_energy.size() == n,
            "site energy list must match the site count");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            require(net.coupling(i, j) == net.coupling(j, i), "coupling matrix must be symmetric");
        }
    }
    for (const auto& osc : net.oscillators) {
        require(osc.site < n, "oscillator attached to unknown site");
        require(std::isfinite(osc.omega) && osc.omega > 0.0, "oscillator frequency must be positive");
        require(std::isfinite(osc.kappa), "oscillator coupling must be finite");
    }
    for (const auto& link : net.links) {
        require(link.a < net.oscillators.size() && link.b < net.oscillators.size() && link.a != link.b,
                "oscillator link refers to unknown oscillator");
    }
}

}  // namespace

OscillatorNetwork network_of(const GeneralizedHolsteinModel& model)
{
    OscillatorNetwork net;
    net.coupling = model.coupling();
    for (std::size_t s = 0; s < model.n_sites(); ++s) {
        for (const Mode& m : model.modes(s)) net.oscillators.push_back({s, m.omega, m.kappa()});
    }
    return net;
}

BasisDescriptor make_basis(const OscillatorNetwork& network, const TruncationSpec& trunc)
{
    check_network(network);
    const std::size_t m = network.oscillators.size();
    require(trunc.per_mode.empty() || trunc.per_mode.size() == m,
            "per-mode truncation list has " + std::to_string(trunc.per_mode.size()) +
                " entries for " + std::to_string(m) + " oscillators");
    std::vector<std::size_t> dims(m);
    std::vector<std::size_t> sites(m);
    for (std::size_t j = 0; j < m; ++j) {
        dims[j] = trunc.levels(j);
        sites[j] = network.oscillators[j].site;
    }
    const std::size_t dim = hilbert_dimension(trunc.sector, network.n_sites(), dims);
    if (dim > trunc.dim_cap) {
        throw DimensionError("Hilbert dimension " + std::to_string(dim) + " exceeds cap " +
                             std::to_string(trunc.dim_cap));
    }
    return {trunc.sector, network.n_sites(), std::move(sites), std::move(dims)};
}

SparseOperator assemble(const OscillatorNetwork& network, const TruncationSpec& trunc)
{
    BasisDescriptor basis = make_basis(network, trunc);
    const std::size_t n_sites = basis.n_sites();
    const std::size_t n_osc = basis.n_oscillators();
    const std::size_t bath_dim = basis.bath_dim();
    const std::size_t el_dim = basis.electronic_dim();

    // Electronic one-body part: hopping and site energies.
    std::vector<Triplet> el_terms;
    for (std::size_t e = 0; e < el_dim; ++e) {
        double diag = 0.0;
        if (!network.site_energy.empty()) {
            for (std::size_t n = 0; n < n_sites; ++n) {
                if (basis.excited(e, n)) diag += network.site_energy[n];
            }
        }
        if (diag != 0.0) el_terms.emplace_back(e, e, diag);
        for (std::size_t n = 0; n < n_sites; ++n) {
            for (std::size_t m = 0; m < n_sites; ++m) {
                const double j = network.coupling(n, m);
                if (n == m || j == 0.0) continue;
                // J_nm sigma+_n sigma-_m: move the excitation from m to n.
                if (!basis.excited(e, m) || basis.excited(e, n)) continue;
                std::size_t target = 0;
                if (trunc.sector == Sector::single_excitation) {
                    target = n;
                } else {
                    target = e ^ basis.single_excitation_state(m) ^ basis.single_excitation_state(n);
                }
                el_terms.emplace_back(target, e, j);
            }
        }
    }

    std::vector<Triplet> triplets;
    std::size_t per_state = 1 + 2 * n_osc + 2 * network.links.size();
    triplets.reserve(el_terms.size() * bath_dim + basis.dim() * per_state);

    for (const Triplet& t : el_terms) {
        for (std::size_t b = 0; b < bath_dim; ++b) {
            triplets.emplace_back(t.row() * bath_dim + b, t.col() * bath_dim + b, t.value());
        }
    }

    std::vector<double> sz(n_sites);
    std::vector<std::size_t> occ(n_osc, 0);
    const auto& dims = basis.fock_dims();
    for (std::size_t e = 0; e < el_dim; ++e) {
        for (std::size_t n = 0; n < n_sites; ++n) sz[n] = basis.excited(e, n) ? 1.0 : -1.0;
        std::fill(occ.begin(), occ.end(), 0);
        for (std::size_t b = 0; b < bath_dim; ++b) {
            const std::size_t col = e * bath_dim + b;
            double diag = 0.0;
            for (std::size_t j = 0; j < n_osc; ++j) {
                const auto& osc = network.oscillators[j];
                diag += osc.omega * static_cast<double>(occ[j]);
                if (osc.kappa != 0.0 && occ[j] + 1 < dims[j]) {
                    // <n+1| b^+ |n> = sqrt(n+1), plus the Hermitian partner
                    const double amp = osc.kappa * sz[osc.site] * std::sqrt(static_cast<double>(occ[j] + 1));
                    const std::size_t row = col + basis.stride(j);
                    triplets.emplace_back(row, col, amp);
                    triplets.emplace_back(col, row, amp);
                }
            }
            if (diag != 0.0) triplets.emplace_back(col, col, diag);
            for (const auto& link : network.links) {
                // b_a^+ b_b |.., n_a, .., n_b, ..>
                if (occ[link.b] == 0 || occ[link.a] + 1 >= dims[link.a]) continue;
                const double amp = link.coupling * std::sqrt(static_cast<double>(occ[link.b])) *
                                   std::sqrt(static_cast<double>(occ[link.a] + 1));
                const std::size_t row = col + basis.stride(link.a) - basis.stride(link.b);
                triplets.emplace_back(row, col, amp);
                triplets.emplace_back(col, row, amp);
            }
            // odometer over bath occupations, last oscillator fastest
            for (std::size_t j = n_osc; j-- > 0;) {
                if (++occ[j] < dims[j]) break;
                occ[j] = 0;
            }
        }
    }

    SparseOperator op;
    op.matrix.resize(static_cast<Eigen::Index>(basis.dim()), static_cast<Eigen::Index>(basis.dim()));
    op.matrix.setFromTriplets(triplets.begin(), triplets.end());
    op.matrix.makeCompressed();
    op.basis = std::move(basis);
    op.hamiltonian = true;
    return op;
}

SparseOperator assemble_hamiltonian(const GeneralizedHolsteinModel& model, const TruncationSpec& trunc)
{
    return assemble(network_of(model), trunc);
}

SparseOperator excitation_number(const BasisDescriptor& basis)
{
    std::vector<Triplet> triplets;
    for (std::size_t e = 0; e < basis.electronic_dim(); ++e) {
        double count = 0.0;
        for (std::size_t n = 0; n < basis.n_sites(); ++n) {
            if (basis.excited(e, n)) count += 1.0;
        }
        if (count == 0.0) continue;
        for (std::size_t b = 0; b < basis.bath_dim(); ++b) {
            const std::size_t i = e * basis.bath_dim() + b;
            triplets.emplace_back(i, i, count);
        }
    }
    SparseOperator op;
    op.matrix.resize(static_cast<Eigen::Index>(basis.dim()), static_cast<Eigen::Index>(basis.dim()));
    op.matrix.setFromTriplets(triplets.begin(), triplets.end());
    op.basis = basis;
    op.hamiltonian = true;
    return op;
}

}  // namespace polaron::core
