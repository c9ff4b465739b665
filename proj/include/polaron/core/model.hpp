#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace polaron::core {

/// One electron on an open chain, one local vibrational mode per site.
/// Energies in GHz.
struct HolsteinModel {
    std::vector<double> hop;            // V_n, n = 1..N-1
    std::vector<double> mode_freq;      // omega_n
    std::vector<double> mode_coupling;  // kappa_n

    std::size_t n_sites() const { return mode_freq.size(); }
    void validate() const;
};

struct Mode {
    double omega = 0.0;       // GHz
    double huang_rhys = 0.0;  // dimensionless R

    double kappa() const;
};

/// Multi-mode Holstein model with an arbitrary symmetric site coupling graph.
///
/// The per-site constant C_n = eps_n + sum_k omega_nk R_nk + D_n is kept for
/// reporting (and for absolute spectral positions) but never enters the
/// assembled dynamics.
class GeneralizedHolsteinModel {
public:
    GeneralizedHolsteinModel(Eigen::MatrixXd coupling,
                             std::vector<double> site_energy,
                             std::vector<double> shift,
                             std::vector<std::vector<Mode>> modes);

    /// Sites only, zero energies and no modes.
    static GeneralizedHolsteinModel bare(Eigen::MatrixXd coupling);

    std::size_t n_sites() const { return site_energy_.size(); }
    const Eigen::MatrixXd& coupling() const { return coupling_; }
    double coupling(std::size_t n, std::size_t m) const { return coupling_(n, m); }
    const std::vector<double>& site_energy() const { return site_energy_; }
    const std::vector<double>& shift() const { return shift_; }
    const std::vector<std::vector<Mode>>& modes() const { return modes_; }
    const std::vector<Mode>& modes(std::size_t site) const { return modes_[site]; }

    std::size_t total_modes() const;
    double offset(std::size_t site) const;

private:
    Eigen::MatrixXd coupling_;
    std::vector<double> site_energy_;
    std::vector<double> shift_;
    std::vector<std::vector<Mode>> modes_;
};

GeneralizedHolsteinModel promote(const HolsteinModel& model);

/// Reads nearest-neighbour couplings and the single mode of each site back
/// into the standard form. Throws if the model is not of that shape.
HolsteinModel demote(const GeneralizedHolsteinModel& model);

}  // namespace polaron::core
