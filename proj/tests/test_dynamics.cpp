#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polaron/circuit/circuit.hpp"
#include "polaron/core/assemble.hpp"
#include "polaron/dynamics/absorption.hpp"
#include "polaron/dynamics/observables.hpp"
#include "polaron/dynamics/propagate.hpp"
#include "polaron/dynamics/rwa.hpp"
#include "polaron/dynamics/thermal.hpp"
#include "polaron/error.hpp"
#include "polaron/units.hpp"

using namespace polaron;
using namespace polaron::dynamics;
using core::Sector;

namespace {

core::TruncationSpec fock(std::size_t d, Sector sector = Sector::single_excitation)
{
    core::TruncationSpec t;
    t.fock_dim = d;
    t.sector = sector;
    return t;
}

core::GeneralizedHolsteinModel holstein3()
{
    return core::promote(core::HolsteinModel{{0.8, 0.5}, {1.0, 1.3, 0.9}, {0.3, 0.25, 0.35}});
}

core::GeneralizedHolsteinModel pair(double j)
{
    Eigen::MatrixXd c(2, 2);
    c << 0, j, j, 0;
    return core::GeneralizedHolsteinModel::bare(c);
}

}  // namespace

TEST(Propagate, LarmorPrecession)
{
    circuit::CircuitDesign d;
    d.qubits.push_back({1.0, 0.0});
    const auto h = circuit::circuit_hamiltonian(d, fock(1, Sector::full_two_level));
    Eigen::VectorXcd plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const auto psi0 = product_state(h.basis, plus);
    PropagationOptions opt;
    opt.keep_reduced = true;
    const std::vector<double> times{0.0, 0.1, 0.25, 0.6};
    for (const auto& traj : {propagate(h, psi0, times, opt), dense_oracle(h, psi0, times, opt)}) {
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double sx = 2.0 * std::real(traj.reduced[i](0, 1));
            EXPECT_NEAR(sx, std::cos(2 * std::numbers::pi * times[i]), 1e-8) << times[i];
        }
        EXPECT_NEAR(2.0 * std::real(traj.reduced[2](0, 1)), 0.0, 1e-8);
    }
}

TEST(Propagate, TwoSiteRabi)
{
    const auto h = core::assemble_hamiltonian(pair(1.0), fock(1));
    const auto psi0 = site_excitation(h.basis, 0);
    const auto times = time_grid(1.0, 0.05);
    const auto traj = propagate(h, psi0, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double c = std::cos(2 * std::numbers::pi * times[i]);
        EXPECT_NEAR(traj.populations[i][0], c * c, 1e-9);
    }
    EXPECT_NEAR(traj.populations[5][0], 0.0, 1e-9);  // t = 0.25 ns
}

TEST(Propagate, KrylovMatchesDenseOracle)
{
    const auto h = core::assemble_hamiltonian(holstein3(), fock(5));
    const auto psi0 = site_excitation(h.basis, 0);
    const auto times = time_grid(10.0, 0.1);
    const auto a = propagate(h, psi0, times);
    const auto b = dense_oracle(h, psi0, times);
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        for (std::size_t s = 0; s < 3; ++s) worst = std::max(worst, std::abs(a.populations[i][s] - b.populations[i][s]));
    EXPECT_LT(worst, 1e-8);
}

TEST(Propagate, DenseOracleMatchesTestSideExponential)
{
    const auto m = holstein3();
    const auto h = core::assemble_hamiltonian(m, fock(3));
    const auto ref = oracle::holstein_dense(m, 3);
    const auto psi0 = site_excitation(h.basis, 2);
    PropagationOptions opt;
    opt.keep_states = true;
    const std::vector<double> times{0.0, 0.7, 3.1};
    const auto traj = propagate(h, psi0, times, opt);
    for (std::size_t i = 0; i < times.size(); ++i)
        EXPECT_LT((traj.states[i] - oracle::evolve(ref, psi0, times[i])).norm(), 1e-9);
}

TEST(Propagate, UnitarityAndEnergy)
{
    for (auto sector : {Sector::single_excitation, Sector::full_two_level}) {
        const auto h = core::assemble_hamiltonian(holstein3(), fock(4, sector));
        Eigen::VectorXcd el = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(h.basis.electronic_dim()));
        el(0) = 0.6;
        el(1) = Complex(0.0, 0.8);
        const std::vector<std::size_t> occ{1, 0, 2};
        const auto psi0 = product_state(h.basis, el, occ);
        PropagationOptions opt;
        opt.keep_states = true;
        const auto times = time_grid(8.0, 0.2);
        const auto traj = propagate(h, psi0, times, opt);
        const double e0 = energy(h, psi0);
        for (std::size_t i = 0; i < times.size(); ++i) {
            EXPECT_NEAR(traj.states[i].norm(), 1.0, 1e-10);
            EXPECT_NEAR(energy(h, traj.states[i]), e0, 1e-8 * std::max(1.0, std::abs(e0)));
        }
        if (sector == Sector::single_excitation) {
            for (const auto& p : traj.populations) {
                double sum = 0.0;
                for (double x : p) {
                    EXPECT_GE(x, -1e-12);
                    EXPECT_LE(x, 1.0 + 1e-12);
                    sum += x;
                }
                EXPECT_NEAR(sum, 1.0, 1e-8);
            }
        }
    }
}

TEST(Propagate, InputValidation)
{
    const auto h = core::assemble_hamiltonian(pair(1.0), fock(1));
    const auto psi0 = site_excitation(h.basis, 0);
    const std::vector<double> backwards{0.0, 1.0, 0.5};
    EXPECT_THROW(propagate(h, psi0, backwards), ValidationError);
    EXPECT_THROW(propagate(h, Eigen::VectorXcd::Ones(3), std::vector<double>{0.0}), ValidationError);
    auto bad = h;
    bad.matrix.coeffRef(0, 1) = Complex(2.0, 0.0);
    EXPECT_THROW(propagate(bad, psi0, std::vector<double>{0.0, 1.0}), ValidationError);
}

TEST(Rwa, NoCouplingNoDeviation)
{
    const auto times = time_grid(10.0, 0.1);
    EXPECT_EQ(rwa_error(0.0, 5.0, times), 0.0);
}

TEST(Rwa, WeakCouplingIsSmall)
{
    const double delta = 5.0, g = 0.02 * delta;
    const auto times = time_grid(5.0 / g, 0.01);
    const auto r = rwa_analysis(g, delta, times);
    EXPECT_LT(r.max_population_deviation, 5e-3);
    EXPECT_GT(r.max_population_deviation, 0.0);
    // only the |00>, |11> preparations deviate
    EXPECT_TRUE(r.worst_initial_state == 0 || r.worst_initial_state == 3);
}

TEST(Rwa, GrowsWithCoupling)
{
    const double delta = 5.0;
    auto scaled = [&](double ratio) {
        const double g = ratio * delta;
        std::vector<double> times;
        for (int k = 0; k <= 400; ++k) times.push_back(k * (5.0 / g) / 400.0);
        return rwa_error(g, delta, times);
    };
    EXPECT_GT(scaled(0.1), scaled(0.01));
}

TEST(Thermal, ZeroTemperatureIsVacuum)
{
    const auto m = holstein3();
    const auto ens = thermal_initial_state(m, fock(4), 0.0, 1, 100, 7);
    ASSERT_EQ(ens.samples.size(), 1u);
    EXPECT_EQ(ens.samples[0].weight, 1.0);
    for (auto n : ens.samples[0].occupation) EXPECT_EQ(n, 0u);
    EXPECT_NEAR(std::abs(ens.samples[0].state(static_cast<Eigen::Index>(ens.basis.index(1, ens.samples[0].occupation)))),
                1.0, 1e-15);
}

TEST(Thermal, BoltzmannRatio)
{
    const double omega = 1.7;
    const double t = omega / units::kBoltzmannGHzPerK;
    const auto p = gibbs_populations(omega, t, 12);
    EXPECT_NEAR(p[1] / p[0], std::exp(-1.0), 1e-14);
    EXPECT_NEAR(p[3] / p[2], std::exp(-1.0), 1e-14);
}

TEST(Thermal, SampledOccupationMatchesBose)
{
    const double omega = 1.0;
    const double t = 2.0 * omega / units::kBoltzmannGHzPerK;  // k_B T / h = 2 omega
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(1, 1);
    core::GeneralizedHolsteinModel m(c, {0}, {0}, {{{omega, 0.01}}});
    const std::size_t n = 10000;
    const auto ens = thermal_initial_state(m, fock(60), t, 0, n, 2024);
    ASSERT_EQ(ens.samples.size(), n);
    double mean = 0.0;
    for (const auto& s : ens.samples) mean += s.weight * static_cast<double>(s.occupation[0]);
    const double nbar = 1.0 / std::expm1(0.5);
    EXPECT_NEAR(bose_occupation(omega, t), nbar, 1e-12);
    const double sigma = std::sqrt(nbar * (nbar + 1.0) / static_cast<double>(n));
    EXPECT_LT(std::abs(mean - nbar), 3.0 * sigma);
}

TEST(Thermal, SeedDeterminesEnsemble)
{
    const auto m = holstein3();
    const auto a = thermal_initial_state(m, fock(4), 0.1, 0, 20, 99);
    const auto b = thermal_initial_state(m, fock(4), 0.1, 0, 20, 99);
    const auto c = thermal_initial_state(m, fock(4), 0.1, 0, 20, 100);
    bool differs = false;
    for (std::size_t i = 0; i < 20; ++i) {
        EXPECT_EQ(a.samples[i].occupation, b.samples[i].occupation);
        differs = differs || a.samples[i].occupation != c.samples[i].occupation;
    }
    EXPECT_TRUE(differs);
    const auto h = core::assemble_hamiltonian(m, fock(4));
    const auto traj = propagate_ensemble(h, a, time_grid(1.0, 0.25));
    for (const auto& p : traj.populations) EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-8);
}

TEST(Absorption, SingleLine)
{
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(1, 1);
    core::GeneralizedHolsteinModel m(c, {2.0}, {0.0}, {{}});
    SpectrumOptions opt;
    opt.omega_min = 0.0;
    opt.omega_max = 4.0;
    opt.n_omega = 401;
    const auto s = absorption_spectrum(m, fock(1), {1.0}, 10.0, 0.02, opt);
    const auto peak = std::max_element(s.intensity.begin(), s.intensity.end()) - s.intensity.begin();
    EXPECT_NEAR(s.omega[peak], 2.0, 1e-12);
    EXPECT_NEAR(s.line_intensity(2.0), 1.0, 1e-6);
}

TEST(Absorption, DimerParitySelection)
{
    const auto m = pair(1.0);
    const auto sym = absorption_spectrum(m, fock(1), {1.0, 1.0}, 10.0, 0.02);
    EXPECT_NEAR(sym.line_intensity(1.0), 2.0, 1e-6);
    EXPECT_NEAR(sym.line_intensity(-1.0), 0.0, 1e-6);
    const auto anti = absorption_spectrum(m, fock(1), {1.0, -1.0}, 10.0, 0.02);
    EXPECT_NEAR(anti.line_intensity(-1.0), 2.0, 1e-6);
    EXPECT_NEAR(anti.line_intensity(1.0), 0.0, 1e-6);
    // default window: Nyquist band at spacing 1 / (4 t_max)
    EXPECT_NEAR(sym.omega.front(), -25.0, 1e-12);
    EXPECT_NEAR(sym.omega[1] - sym.omega[0], 0.025, 1e-12);
}

TEST(Absorption, PoissonProgression)
{
    const double r = 0.25, omega = 1.0, eps = 3.0;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(1, 1);
    core::GeneralizedHolsteinModel m(c, {eps}, {0.0}, {{{omega, r}}});
    const auto s = absorption_spectrum(m, fock(16), {1.0}, 20.0, 0.01);
    double factorial = 1.0;
    for (int k = 0; k <= 2; ++k) {
        if (k) factorial *= k;
        const double expected = std::exp(-r) * std::pow(r, k) / factorial;
        EXPECT_NEAR(s.line_intensity(eps + k * omega), expected, 1e-3) << k;
    }
}
