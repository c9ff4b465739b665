#include "polaron/cli/run.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "polaron/bath/chain.hpp"
#include "polaron/circuit/circuit.hpp"
#include "polaron/circuit/circuit_io.hpp"
#include "polaron/core/assemble.hpp"
#include "polaron/core/model_io.hpp"
#include "polaron/dynamics/absorption.hpp"
#include "polaron/dynamics/observables.hpp"
#include "polaron/dynamics/propagate.hpp"
#include "polaron/dynamics/thermal.hpp"
#include "polaron/error.hpp"
#include "polaron/io.hpp"
#include "polaron/resources/estimator.hpp"
#include "polaron/spectral/spectral_density.hpp"

namespace polaron::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Parsed command line; validated before any computation.
struct RunConfig {
    std::string model_path;
    std::string modes_path;
    std::string design_path;
    std::string hardware_path;
    std::string density_path;
    std::string out_dir = ".";

    double t_max = 10.0;
    double dt = 0.01;
    std::size_t fock_dim = 8;
    std::string sector = "single";
    std::size_t initial_site = 1;
    double temperature = 0.0;
    std::size_t samples = 64;
    std::uint64_t seed = 1;
    bool dense = false;

    std::size_t chains = 0;
    std::string strategy = "round_robin";
    std::optional<double> source_temp;
    std::optional<double> target_temp;
    double delta = circuit::kDefaultTunnelSplitting;

    std::optional<double> beta;
    double ip_na = 50.0;
    double z_ohm = 100.0;
    circuit::Limits limits;

    double budget_gb = 250.0;
    std::uint64_t depth = 4;
    std::uint64_t matsubara = 0;
    std::uint64_t min_sites = 1;
    std::uint64_t max_sites = 64;
    std::uint64_t max_peaks = 256;

    std::vector<double> dipoles;
    double omega_min = 0.0;
    double omega_max = 0.0;
    std::size_t n_omega = 0;
};

core::TruncationSpec truncation(const RunConfig& cfg)
{
    core::TruncationSpec t;
    t.fock_dim = cfg.fock_dim;
    require(cfg.fock_dim >= 1, "--fock-dim must be at least 1");
    if (cfg.sector == "single") {
        t.sector = core::Sector::single_excitation;
    } else {
        require(cfg.sector == "full", "--sector must be 'single' or 'full'");
        t.sector = core::Sector::full_two_level;
    }
    return t;
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

bool temperatures_given(const RunConfig& cfg)
{
    require(cfg.source_temp.has_value() == cfg.target_temp.has_value(),
            "--source-temp and --target-temp must be given together");
    return cfg.source_temp.has_value();
}

std::string trajectory_csv(const dynamics::Trajectory& traj)
{
    std::string out = "t_ns";
    const std::size_t n = traj.populations.empty() ? 0 : traj.populations[0].size();
    for (std::size_t s = 0; s < n; ++s) out += ",p_site_" + std::to_string(s + 1);
    out += "\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out += io::format_number(traj.times[i]);
        for (double p : traj.populations[i]) out += "," + io::format_number(p);
        out += "\n";
    }
    return out;
}

json cmd_simulate(const RunConfig& cfg)
{
    require(!cfg.model_path.empty(), "simulate needs --model");
    const core::TruncationSpec trunc = truncation(cfg);
    const std::vector<double> times = dynamics::time_grid(cfg.t_max, cfg.dt);
    const json doc = read_json(cfg.model_path);

    dynamics::PropagationOptions opt;
    dynamics::Trajectory traj;
    std::size_t dim = 0;
    std::string source;
    if (doc.contains("qubits")) {
        source = "design";
        require(cfg.temperature == 0.0, "thermal initial states need a model file, not a circuit design");
        const circuit::CircuitDesign design = circuit::design_from_json(doc);
        const core::SparseOperator h = circuit::circuit_hamiltonian(design, trunc);
        dim = h.dim();
        require(cfg.initial_site >= 1 && cfg.initial_site <= design.qubits.size(), "--initial-site out of range");
        const core::StateVector psi0 = dynamics::site_excitation(h.basis, cfg.initial_site - 1);
        traj = cfg.dense ? dynamics::dense_oracle(h, psi0, times, opt) : dynamics::propagate(h, psi0, times, opt);
    } else {
        source = "model";
        core::GeneralizedHolsteinModel model = core::model_from_json(doc);
        if (temperatures_given(cfg)) model = spectral::rescale(model, *cfg.source_temp, *cfg.target_temp);
        require(cfg.initial_site >= 1 && cfg.initial_site <= model.n_sites(), "--initial-site out of range");
        const core::SparseOperator h = core::assemble_hamiltonian(model, trunc);
        dim = h.dim();
        if (cfg.temperature > 0.0) {
            const auto ens = dynamics::thermal_initial_state(model, trunc, cfg.temperature, cfg.initial_site - 1,
                                                             cfg.samples, cfg.seed);
            traj = dynamics::propagate_ensemble(h, ens, times, opt);
        } else {
            require(cfg.temperature == 0.0, "--temperature must be non-negative");
            const core::StateVector psi0 = dynamics::site_excitation(h.basis, cfg.initial_site - 1);
            traj = cfg.dense ? dynamics::dense_oracle(h, psi0, times, opt) : dynamics::propagate(h, psi0, times, opt);
        }
    }
    const fs::path out = fs::path(cfg.out_dir) / "trajectory.csv";
    io::write_atomic(out, trajectory_csv(traj));
    return {{"command", "simulate"},
            {"source", source},
            {"dimension", dim},
            {"n_times", traj.times.size()},
            {"final_populations", traj.populations.back()},
            {"output", out.string()}};
}

spectral::ModeSet mode_set_from_csv(const std::string& path)
{
    const spectral::SpectralDensity d = spectral::load_csv(path);
    require(d.kind() == spectral::Kind::discrete_modes,
            "--modes expects a discrete mode list (header omega_ghz,kappa_ghz or wavenumber_cm1,kappa_cm1)");
    return spectral::to_mode_set(d, d.size(), spectral::Discretization::direct);
}

bath::PartitionStrategy strategy_of(const std::string& name)
{
    if (name == "round_robin") return bath::PartitionStrategy::round_robin;
    require(name == "contiguous", "--strategy must be 'round_robin' or 'contiguous'");
    return bath::PartitionStrategy::contiguous;
}

json cmd_transform(const RunConfig& cfg)
{
    require(!cfg.modes_path.empty(), "transform needs --modes");
    require(cfg.chains >= 1, "--chains must be at least 1");
    spectral::ModeSet modes = mode_set_from_csv(cfg.modes_path);
    if (temperatures_given(cfg)) modes = spectral::rescale(modes, *cfg.source_temp, *cfg.target_temp);
    const bath::ChainBath chains = bath::transform(modes, cfg.chains, strategy_of(cfg.strategy));
    const fs::path out = fs::path(cfg.out_dir) / "chains.json";
    io::write_atomic(out, io::rounded(bath::to_json(chains)).dump(2) + "\n");

    std::vector<double> heads;
    std::size_t truncated = 0;
    for (const auto& c : chains.chains) {
        heads.push_back(c.head_coupling);
        truncated += c.truncated ? 1 : 0;
    }
    return io::rounded(json{{"command", "transform"},
                            {"modes", modes.size()},
                            {"chains", chains.chains.size()},
                            {"max_length", chains.max_length()},
                            {"head_couplings_ghz", heads},
                            {"truncated_chains", truncated},
                            {"output", out.string()}});
}

json cmd_compile(const RunConfig& cfg)
{
    require(!cfg.model_path.empty(), "compile needs --model");
    core::GeneralizedHolsteinModel model = core::load_model(cfg.model_path);
    if (temperatures_given(cfg)) model = spectral::rescale(model, *cfg.source_temp, *cfg.target_temp);
    circuit::CircuitDesign design;
    if (cfg.chains >= 1) {
        std::vector<bath::ChainBath> baths(model.n_sites());
        for (std::size_t s = 0; s < model.n_sites(); ++s) {
            spectral::ModeSet modes;
            for (const auto& m : model.modes(s)) modes.modes.push_back({m.omega, m.kappa()});
            if (modes.size() == 0) continue;
            baths[s] = bath::transform(modes, std::min(cfg.chains, modes.size()), strategy_of(cfg.strategy));
        }
        design = circuit::compile(model, baths, cfg.delta);
    } else {
        design = circuit::compile(model, cfg.delta);
    }
    const fs::path out = fs::path(cfg.out_dir) / "design.json";
    io::write_atomic(out, io::rounded(circuit::to_json(design)).dump(2) + "\n");
    return {{"command", "compile"},
            {"qubits", design.qubits.size()},
            {"couplings", design.couplings.size()},
            {"oscillators", design.oscillators.size()},
            {"links", design.links.size()},
            {"output", out.string()}};
}

json cmd_feasibility(const RunConfig& cfg, bool& infeasible)
{
    require(!cfg.design_path.empty(), "feasibility needs --design");
    const circuit::CircuitDesign design = circuit::load_design(cfg.design_path);
    std::vector<circuit::OscillatorHardware> hw;
    if (!cfg.hardware_path.empty()) {
        hw = circuit::hardware_from_json(read_json(cfg.hardware_path));
    } else {
        for (const auto& o : design.oscillators) {
            circuit::OscillatorHardware h;
            h.persistent_current_na = cfg.ip_na;
            h.impedance_ohm = cfg.z_ohm;
            // without an explicit beta, assume the value the design asks for
            h.beta = cfg.beta ? *cfg.beta : circuit::required_beta(h, o.omega_prime, std::abs(o.eta) / o.omega_prime);
            require(h.beta < 1.0, "oscillator needs beta >= 1; no hardware realisation");
            hw.push_back(h);
        }
    }
    const circuit::FeasibilityReport report = circuit::check_feasibility(design, hw, cfg.limits);
    const fs::path out = fs::path(cfg.out_dir) / "feasibility.json";
    io::write_atomic(out, io::rounded(circuit::to_json(report)).dump(2) + "\n");
    infeasible = !report.pass;
    return {{"command", "feasibility"},
            {"verdict", report.pass ? "pass" : "fail"},
            {"violated", report.violated()},
            {"checks", report.checks.size()},
            {"output", out.string()}};
}

json cmd_estimate(const RunConfig& cfg)
{
    require(cfg.budget_gb > 0.0, "--budget-gb must be positive");
    resources::FrontierOptions opt;
    opt.depth = cfg.depth;
    opt.matsubara = cfg.matsubara;
    opt.min_sites = cfg.min_sites;
    opt.max_sites = cfg.max_sites;
    opt.max_peaks = cfg.max_peaks;
    const auto budget = static_cast<std::uint64_t>(cfg.budget_gb * static_cast<double>(resources::kGigabyte));
    const auto points = resources::frontier(budget, opt);
    const fs::path out = fs::path(cfg.out_dir) / "frontier.csv";
    io::write_atomic(out, resources::frontier_csv(points));
    return {{"command", "estimate"},
            {"budget_bytes", budget},
            {"depth", cfg.depth},
            {"matsubara", cfg.matsubara},
            {"points", points.size()},
            {"output", out.string()}};
}

json cmd_spectrum(const RunConfig& cfg)
{
    if (!cfg.density_path.empty()) {
        require(cfg.model_path.empty(), "give either --density or --model, not both");
        require(cfg.temperature > 0.0, "thermal transform needs --temperature > 0");
        const auto density = spectral::load_csv(cfg.density_path);
        const auto thermal = spectral::thermal_transform(density, cfg.temperature);
        const fs::path out = fs::path(cfg.out_dir) / "thermal_density.csv";
        io::write_atomic(out, spectral::thermal_csv(thermal));
        return {{"command", "spectrum"}, {"kind", "thermal"}, {"points", thermal.samples.size()}, {"output", out.string()}};
    }
    require(!cfg.model_path.empty(), "spectrum needs --model or --density");
    core::GeneralizedHolsteinModel model = core::load_model(cfg.model_path);
    if (temperatures_given(cfg)) model = spectral::rescale(model, *cfg.source_temp, *cfg.target_temp);
    core::TruncationSpec trunc = truncation(cfg);
    std::vector<double> dipoles = cfg.dipoles;
    if (dipoles.empty()) dipoles.assign(model.n_sites(), 1.0);
    dynamics::SpectrumOptions opt;
    opt.omega_min = cfg.omega_min;
    opt.omega_max = cfg.omega_max;
    opt.n_omega = cfg.n_omega;
    const auto spec = dynamics::absorption_spectrum(model, trunc, dipoles, cfg.t_max, cfg.dt, opt);
    std::string csv = "omega_ghz,intensity\n";
    std::size_t peak = 0;
    for (std::size_t i = 0; i < spec.omega.size(); ++i) {
        csv += io::format_number(spec.omega[i]) + "," + io::format_number(spec.intensity[i]) + "\n";
        if (spec.intensity[i] > spec.intensity[peak]) peak = i;
    }
    const fs::path out = fs::path(cfg.out_dir) / "spectrum.csv";
    io::write_atomic(out, csv);
    return io::rounded(json{{"command", "spectrum"},
                            {"kind", "absorption"},
                            {"points", spec.omega.size()},
                            {"peak_omega_ghz", spec.omega[peak]},
                            {"output", out.string()}});
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--out", cfg.out_dir, "output directory");
}

void add_rescale(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--source-temp", cfg.source_temp, "temperature of the physical system (K)");
    sub->add_option("--target-temp", cfg.target_temp, "simulator temperature (K)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Holstein-model analog simulator toolkit", "polaron"};
    app.require_subcommand(1);

    auto* simulate = app.add_subcommand("simulate", "propagate a model or compiled design");
    simulate->add_option("--model", cfg.model_path, "model JSON or design JSON")->required();
    simulate->add_option("--t-max", cfg.t_max, "final time (ns)");
    simulate->add_option("--dt", cfg.dt, "output spacing (ns)");
    simulate->add_option("--fock-dim", cfg.fock_dim, "levels per oscillator");
    simulate->add_option("--sector", cfg.sector, "single | full");
    simulate->add_option("--initial-site", cfg.initial_site, "excited site (1-based)");
    simulate->add_option("--temperature", cfg.temperature, "initial bath temperature (K)");
    simulate->add_option("--samples", cfg.samples, "thermal samples");
    simulate->add_option("--seed", cfg.seed, "thermal sampling seed");
    simulate->add_flag("--dense", cfg.dense, "use the dense eigendecomposition propagator");
    add_rescale(simulate, cfg);
    add_common(simulate, cfg);

    auto* compile = app.add_subcommand("compile", "map a model onto simulator parameters");
    compile->add_option("--model", cfg.model_path, "model JSON")->required();
    compile->add_option("--chains", cfg.chains, "chains per qubit (0 = star)");
    compile->add_option("--strategy", cfg.strategy, "round_robin | contiguous");
    compile->add_option("--delta", cfg.delta, "uniform tunnel splitting (GHz)");
    add_rescale(compile, cfg);
    add_common(compile, cfg);

    auto* transform = app.add_subcommand("transform", "star-to-chain bath transformation");
    transform->add_option("--modes", cfg.modes_path, "mode CSV")->required();
    transform->add_option("--chains", cfg.chains, "number of parallel chains")->required();
    transform->add_option("--strategy", cfg.strategy, "round_robin | contiguous");
    add_rescale(transform, cfg);
    add_common(transform, cfg);

    auto* feasibility = app.add_subcommand("feasibility", "hardware range checks");
    feasibility->add_option("--design", cfg.design_path, "design JSON")->required();
    feasibility->add_option("--hardware", cfg.hardware_path, "per-oscillator hardware JSON");
    feasibility->add_option("--beta", cfg.beta, "inductive division ratio for every oscillator");
    feasibility->add_option("--ip-na", cfg.ip_na, "persistent current (nA)");
    feasibility->add_option("--z-ohm", cfg.z_ohm, "resonator impedance (Ohm)");
    feasibility->add_option("--g-max", cfg.limits.g_max, "largest qubit coupling (GHz)");
    feasibility->add_option("--eta-max", cfg.limits.eta_max, "qubit-oscillator coupling bound (GHz)");
    feasibility->add_option("--beta-max", cfg.limits.beta_max, "largest inductive division ratio");
    feasibility->add_option("--z-max", cfg.limits.z_max, "largest impedance (Ohm)");
    add_common(feasibility, cfg);

    auto* estimate = app.add_subcommand("estimate", "classical memory frontier");
    estimate->add_option("--budget-gb", cfg.budget_gb, "memory budget (GB)");
    estimate->add_option("--depth", cfg.depth, "hierarchy depth");
    estimate->add_option("--matsubara", cfg.matsubara, "Matsubara terms per peak");
    estimate->add_option("--min-sites", cfg.min_sites, "smallest system size");
    estimate->add_option("--max-sites", cfg.max_sites, "largest system size");
    estimate->add_option("--max-peaks", cfg.max_peaks, "peak search ceiling");
    add_common(estimate, cfg);

    auto* spectrum = app.add_subcommand("spectrum", "absorption spectrum or thermal spectral density");
    spectrum->add_option("--model", cfg.model_path, "model JSON");
    spectrum->add_option("--density", cfg.density_path, "spectral density CSV");
    spectrum->add_option("--temperature", cfg.temperature, "temperature for the thermal transform (K)");
    spectrum->add_option("--t-max", cfg.t_max, "correlation length (ns)");
    spectrum->add_option("--dt", cfg.dt, "time step (ns)");
    spectrum->add_option("--fock-dim", cfg.fock_dim, "levels per oscillator");
    spectrum->add_option("--dipoles", cfg.dipoles, "dipole amplitude per site")->delimiter(',');
    spectrum->add_option("--omega-min", cfg.omega_min, "window start (GHz)");
    spectrum->add_option("--omega-max", cfg.omega_max, "window end (GHz)");
    spectrum->add_option("--n-omega", cfg.n_omega, "window points (0 = automatic)");
    add_rescale(spectrum, cfg);
    add_common(spectrum, cfg);

    std::vector<std::string> storage;
    storage.push_back("polaron");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        json summary;
        bool infeasible = false;
        if (*simulate) summary = cmd_simulate(cfg);
        else if (*compile) summary = cmd_compile(cfg);
        else if (*transform) summary = cmd_transform(cfg);
        else if (*feasibility) summary = cmd_feasibility(cfg, infeasible);
        else if (*estimate) summary = cmd_estimate(cfg);
        else summary = cmd_spectrum(cfg);
        out << io::rounded(summary).dump() << std::endl;
        return infeasible ? kExitInfeasible : kExitOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << std::endl;
        out << json{{"error", e.what()}}.dump() << std::endl;
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << std::endl;
        return kExitFailure;
    }
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace polaron::cli
