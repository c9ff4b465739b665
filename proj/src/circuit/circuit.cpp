#include "polaron/circuit/circuit.hpp"

#include <cmath>
#include <string>

#include "polaron/core/kron.hpp"
#include "polaron/error.hpp"

namespace polaron::circuit {

void CircuitDesign::validate() const
{
    require(!qubits.empty(), "design has no qubits");
    for (const Qubit& q : qubits) {
        require(std::isfinite(q.delta) && std::isfinite(q.bias), "qubit parameters must be finite");
    }
    for (const QubitCoupling& c : couplings) {
        require(c.i < qubits.size() && c.j < qubits.size() && c.i != c.j, "coupling refers to unknown qubit pair");
        require(std::isfinite(c.g), "qubit coupling must be finite");
    }
    for (const Oscillator& o : oscillators) {
        require(o.qubit < qubits.size(), "oscillator attached to unknown qubit");
        require(std::isfinite(o.omega_prime) && o.omega_prime > 0.0, "oscillator frequency must be positive");
        require(std::isfinite(o.eta), "oscillator coupling must be finite");
    }
    for (const OscillatorLink& l : links) {
        require(l.a < oscillators.size() && l.b < oscillators.size() && l.a != l.b,
                "link refers to unknown oscillator");
    }
}

namespace {

CircuitDesign qubits_of(const core::GeneralizedHolsteinModel& model, double delta)
{
    CircuitDesign d;
    d.qubits.assign(model.n_sites(), Qubit{delta, 0.0});
    for (std::size_t i = 0; i < model.n_sites(); ++i) {
        for (std::size_t j = i + 1; j < model.n_sites(); ++j) {
            if (model.coupling(i, j) != 0.0) d.couplings.push_back({i, j, model.coupling(i, j)});
        }
    }
    return d;
}

}  // namespace

CircuitDesign compile(const core::GeneralizedHolsteinModel& model, double delta)
{
    CircuitDesign d = qubits_of(model, delta);
    for (std::size_t s = 0; s < model.n_sites(); ++s) {
        const auto& modes = model.modes(s);
        for (std::size_t k = 0; k < modes.size(); ++k) {
            d.oscillators.push_back({s, modes[k].omega, modes[k].kappa(), k, 0});
        }
    }
    return d;
}

CircuitDesign compile(const core::GeneralizedHolsteinModel& model, std::span<const bath::ChainBath> site_baths,
                      double delta)
{
    require(site_baths.size() == model.n_sites(), "one chain bath per site required");
    CircuitDesign d = qubits_of(model, delta);
    for (std::size_t s = 0; s < site_baths.size(); ++s) {
        const auto& chains = site_baths[s].chains;
        for (std::size_t c = 0; c < chains.size(); ++c) {
            const std::size_t first = d.oscillators.size();
            for (std::size_t i = 0; i < chains[c].length(); ++i) {
                d.oscillators.push_back({s, chains[c].site_freq[i], i == 0 ? chains[c].head_coupling : 0.0, c, i});
                if (i > 0) d.links.push_back({first + i - 1, first + i, chains[c].link_coupling[i - 1]});
            }
        }
    }
    return d;
}

void OscillatorHardware::validate() const
{
    require(std::isfinite(beta) && beta >= 0.0 && beta < 1.0, "inductive division ratio must lie in [0, 1)");
    require(std::isfinite(persistent_current_na) && persistent_current_na > 0.0, "persistent current must be positive");
    require(std::isfinite(impedance_ohm) && impedance_ohm > 0.0, "impedance must be positive");
}

double coupling_ratio(const OscillatorHardware& hw, double frequency_ghz)
{
    hw.validate();
    require(std::isfinite(frequency_ghz) && frequency_ghz > 0.0, "frequency must be positive");
    return 5.48 * hw.beta * (hw.persistent_current_na / 50.0) * std::sqrt(hw.impedance_ohm / 100.0) / frequency_ghz;
}

double required_beta(const OscillatorHardware& hw, double frequency_ghz, double sqrt_huang_rhys)
{
    require(std::isfinite(hw.persistent_current_na) && hw.persistent_current_na > 0.0,
            "persistent current must be positive");
    require(std::isfinite(hw.impedance_ohm) && hw.impedance_ohm > 0.0, "impedance must be positive");
    require(std::isfinite(frequency_ghz) && frequency_ghz > 0.0, "frequency must be positive");
    require(std::isfinite(sqrt_huang_rhys) && sqrt_huang_rhys >= 0.0, "coupling ratio must be non-negative");
    return sqrt_huang_rhys * frequency_ghz /
           (5.48 * (hw.persistent_current_na / 50.0) * std::sqrt(hw.impedance_ohm / 100.0));
}

std::vector<std::string> FeasibilityReport::violated() const
{
    std::vector<std::string> names;
    for (const Check& c : checks) {
        if (c.pass) continue;
        bool seen = false;
        for (const auto& n : names) seen = seen || n == c.name;
        if (!seen) names.push_back(c.name);
    }
    return names;
}

FeasibilityReport check_feasibility(const CircuitDesign& design, std::span<const OscillatorHardware> hardware,
                                    const Limits& limits)
{
    design.validate();
    require(hardware.size() == design.oscillators.size(),
            "topology mismatch: " + std::to_string(hardware.size()) + " hardware entries for " +
                std::to_string(design.oscillators.size()) + " oscillators");

    FeasibilityReport report;
    auto add = [&](std::string name, std::string subject, double value, double margin, bool pass) {
        report.checks.push_back({std::move(name), std::move(subject), value, margin, pass});
        report.pass = report.pass && pass;
    };

    for (const QubitCoupling& c : design.couplings) {
        const double margin = std::min(c.g - limits.g_min, limits.g_max - c.g);
        add("g range", "coupling " + std::to_string(c.i + 1) + "-" + std::to_string(c.j + 1), c.g, margin,
            margin >= 0.0);
    }
    for (std::size_t k = 0; k < design.oscillators.size(); ++k) {
        const Oscillator& o = design.oscillators[k];
        const OscillatorHardware& hw = hardware[k];
        hw.validate();
        const std::string who = "oscillator " + std::to_string(k + 1);
        const double eta_margin = limits.eta_max - std::abs(o.eta);
        add("eta range", who, o.eta, eta_margin, eta_margin > 0.0);
        add("beta", who, hw.beta, limits.beta_max - hw.beta, hw.beta <= limits.beta_max);
        add("impedance", who, hw.impedance_ohm, limits.z_max - hw.impedance_ohm, hw.impedance_ohm <= limits.z_max);
        const double needed = required_beta(hw, o.omega_prime, std::abs(o.eta) / o.omega_prime);
        add("required beta", who, needed, limits.beta_max - needed, needed <= limits.beta_max);
    }
    return report;
}

core::SparseOperator circuit_hamiltonian(const CircuitDesign& design, const core::TruncationSpec& trunc)
{
    design.validate();
    for (const Qubit& q : design.qubits) {
        require(q.bias == 0.0, "nonzero energy bias is outside the excitation-conserving simulator form");
    }
    namespace kr = core::kron;
    const std::size_t n = design.qubits.size();
    require(trunc.per_mode.empty() || trunc.per_mode.size() == design.oscillators.size(),
            "per-mode truncation list does not match the oscillator count");
    std::vector<std::size_t> dims;
    std::vector<std::size_t> owner;
    for (std::size_t k = 0; k < design.oscillators.size(); ++k) {
        dims.push_back(trunc.levels(k));
        owner.push_back(design.oscillators[k].qubit);
    }
    const std::size_t full = core::hilbert_dimension(core::Sector::full_two_level, n, dims);
    if (full > trunc.dim_cap) {
        throw DimensionError("circuit register dimension " + std::to_string(full) + " exceeds cap " +
                             std::to_string(trunc.dim_cap));
    }

    const kr::Register reg(n, dims);
    core::SparseMatrix h(static_cast<Eigen::Index>(reg.dim()), static_cast<Eigen::Index>(reg.dim()));
    for (const QubitCoupling& c : design.couplings) {
        const core::SparseMatrix xx = reg.qubit(c.i, kr::sigma_x()) * reg.qubit(c.j, kr::sigma_x());
        const core::SparseMatrix yy = reg.qubit(c.i, kr::sigma_y()) * reg.qubit(c.j, kr::sigma_y());
        h += 0.5 * c.g * core::SparseMatrix(xx + yy);
    }
    for (std::size_t q = 0; q < n; ++q) h += 0.5 * design.qubits[q].delta * reg.qubit(q, kr::sigma_z());
    for (std::size_t k = 0; k < design.oscillators.size(); ++k) {
        const Oscillator& o = design.oscillators[k];
        const core::SparseMatrix x = reg.mode(k, kr::creation(dims[k])) + reg.mode(k, kr::annihilation(dims[k]));
        h += o.eta * core::SparseMatrix(reg.qubit(o.qubit, kr::sigma_z()) * x);
        h += o.omega_prime * reg.mode(k, kr::number(dims[k]));
    }
    for (const OscillatorLink& l : design.links) {
        const core::SparseMatrix hop = reg.mode(l.a, kr::creation(dims[l.a])) * reg.mode(l.b, kr::annihilation(dims[l.b]));
        h += l.coupling * core::SparseMatrix(hop + core::SparseMatrix(hop.adjoint()));
    }

    core::SparseOperator op;
    op.basis = core::BasisDescriptor(trunc.sector, n, owner, dims);
    if (trunc.sector == core::Sector::single_excitation) {
        op.matrix = kr::restrict_to(h, reg.single_excitation_indices());
    } else {
        op.matrix = h;
    }
    op.matrix.makeCompressed();
    op.hamiltonian = true;
    return op;
}

}  // namespace polaron::circuit
