#include "polaron/core/model.hpp"

#include <cmath>
#include <string>

#include "polaron/error.hpp"

namespace polaron::core {

void HolsteinModel::validate() const
{
    const std::size_t n = mode_freq.size();
    require(n >= 1, "Holstein model needs at least one site");
    require(hop.size() == n - 1, "Holstein model: expected N-1 hopping terms");
    require(mode_coupling.size() == n, "Holstein model: expected N mode couplings");
    for (double w : mode_freq) {
        require(std::isfinite(w) && w > 0.0, "Holstein model: mode frequencies must be positive");
    }
    for (double v : hop) require(std::isfinite(v), "Holstein model: non-finite hopping");
    for (double k : mode_coupling) require(std::isfinite(k), "Holstein model: non-finite coupling");
}

double Mode::kappa() const { return omega * std::sqrt(huang_rhys); }

GeneralizedHolsteinModel::GeneralizedHolsteinModel(Eigen::MatrixXd coupling,
                                                   std::vector<double> site_energy,
                                                   std::vector<double> shift,
                                                   std::vector<std::vector<Mode>> modes)
    : coupling_(std::move(coupling))
    , site_energy_(std::move(site_energy))
    , shift_(std::move(shift))
    , modes_(std::move(modes))
{
    const auto n = static_cast<Eigen::Index>(site_energy_.size());
    require(n >= 1, "model needs at least one site");
    require(coupling_.rows() == n && coupling_.cols() == n, "coupling matrix must be N x N");
    require(shift_.size() == site_energy_.size(), "shift list length must equal site count");
    require(modes_.size() == site_energy_.size(), "mode lists must be given per site");
    for (Eigen::Index i = 0; i < n; ++i) {
        require(coupling_(i, i) == 0.0, "coupling matrix must have a zero diagonal");
        for (Eigen::Index j = 0; j < n; ++j) {
            require(std::isfinite(coupling_(i, j)), "coupling matrix has non-finite entries");
            require(coupling_(i, j) == coupling_(j, i), "coupling matrix must be symmetric");
        }
    }
    for (std::size_t s = 0; s < modes_.size(); ++s) {
        for (const Mode& m : modes_[s]) {
            require(std::isfinite(m.omega) && m.omega > 0.0,
                    "site " + std::to_string(s + 1) + ": mode frequency must be positive");
            require(std::isfinite(m.huang_rhys) && m.huang_rhys >= 0.0,
                    "site " + std::to_string(s + 1) + ": Huang-Rhys factor must be non-negative");
        }
    }
}

GeneralizedHolsteinModel GeneralizedHolsteinModel::bare(Eigen::MatrixXd coupling)
{
    const auto n = static_cast<std::size_t>(coupling.rows());
    return {std::move(coupling), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
            std::vector<std::vector<Mode>>(n)};
}

std::size_t GeneralizedHolsteinModel::total_modes() const
{
    std::size_t total = 0;
    for (const auto& site : modes_) total += site.size();
    return total;
}

double GeneralizedHolsteinModel::offset(std::size_t site) const
{
    double c = site_energy_.at(site) + shift_.at(site);
    for (const Mode& m : modes_[site]) c += m.omega * m.huang_rhys;
    return c;
}

GeneralizedHolsteinModel promote(const HolsteinModel& model)
{
    model.validate();
    const std::size_t n = model.n_sites();
    Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        coupling(i, i + 1) = model.hop[i];
        coupling(i + 1, i) = model.hop[i];
    }
    std::vector<std::vector<Mode>> modes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ratio = model.mode_coupling[i] / model.mode_freq[i];
        modes[i].push_back({model.mode_freq[i], ratio * ratio});
    }
    return {std::move(coupling), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
            std::move(modes)};
}

HolsteinModel demote(const GeneralizedHolsteinModel& model)
{
    const std::size_t n = model.n_sites();
    HolsteinModel out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool neighbours = (i + 1 == j) || (j + 1 == i);
            require(neighbours || model.coupling(i, j) == 0.0,
                    "model has couplings beyond nearest neighbours");
        }
        require(model.modes(i).size() == 1, "each site must carry exactly one mode");
        out.mode_freq.push_back(model.modes(i)[0].omega);
        out.mode_coupling.push_back(model.modes(i)[0].kappa());
        if (i + 1 < n) out.hop.push_back(model.coupling(i, i + 1));
    }
    return out;
}

}  // namespace polaron::core
