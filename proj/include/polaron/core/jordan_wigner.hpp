#pragma once

#include "polaron/core/basis.hpp"
#include "polaron/core/model.hpp"

namespace polaron::core {

struct JordanWignerReport {
    double max_abs_deviation = 0.0;  // after removing `offset`
    double offset = 0.0;             // constant diagonal shift spin - fermion
};

/// Builds the Holstein Hamiltonian twice on the qubit register + oscillators:
/// once from explicit fermion operators (string-dressed sigma-), once from
/// Pauli products, restricts both to the one-particle sector and compares
/// them entrywise after aligning a constant diagonal shift.
///
/// The fermionic form carries the exact pre-image of kappa sz (b^+ + b),
/// i.e. kappa (2 a^+a - 1)(b^+ + b).
JordanWignerReport jordan_wigner_check(const HolsteinModel& model, const TruncationSpec& trunc);

/// Same two routes, returning the restricted matrices (fermionic, spin).
std::pair<SparseMatrix, SparseMatrix> jordan_wigner_pair(const HolsteinModel& model,
                                                         const TruncationSpec& trunc);

}  // namespace polaron::core
