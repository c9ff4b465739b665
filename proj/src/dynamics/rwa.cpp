#include "polaron/dynamics/rwa.hpp"

#include <cmath>

#include "polaron/core/kron.hpp"
#include "polaron/dynamics/propagate.hpp"
#include "polaron/error.hpp"

namespace polaron::dynamics {

RwaReport rwa_analysis(double g, double delta, std::span<const double> times)
{
    require(std::isfinite(g) && std::isfinite(delta), "non-finite RWA parameters");
    namespace kr = core::kron;
    const kr::Register reg(2, {});
    const core::SparseMatrix z = reg.qubit(0, kr::sigma_z()) + reg.qubit(1, kr::sigma_z());
    const core::SparseMatrix xx = reg.qubit(0, kr::sigma_x()) * reg.qubit(1, kr::sigma_x());
    const core::SparseMatrix yy = reg.qubit(0, kr::sigma_y()) * reg.qubit(1, kr::sigma_y());

    const core::BasisDescriptor basis(core::Sector::full_two_level, 2, {}, {});
    core::SparseOperator full{core::SparseMatrix(0.5 * delta * z + g * xx), basis, true};
    core::SparseOperator rwa{core::SparseMatrix(0.5 * delta * z + 0.5 * g * (xx + yy)), basis, true};

    RwaReport report;
    for (std::size_t s = 0; s < 4; ++s) {
        StateVector psi = StateVector::Zero(4);
        psi(static_cast<Eigen::Index>(s)) = 1.0;
        const Trajectory a = dense_oracle(full, psi, times);
        const Trajectory b = dense_oracle(rwa, psi, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            for (std::size_t q = 0; q < 2; ++q) {
                const double dev = std::abs(a.populations[i][q] - b.populations[i][q]);
                if (dev > report.max_population_deviation) {
                    report.max_population_deviation = dev;
                    report.worst_initial_state = s;
                    report.worst_time = times[i];
                }
            }
        }
    }
    return report;
}

}  // namespace polaron::dynamics
