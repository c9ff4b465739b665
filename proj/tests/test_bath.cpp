#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "polaron/bath/chain.hpp"
#include "polaron/dynamics/propagate.hpp"
#include "polaron/error.hpp"

using namespace polaron;
using namespace polaron::bath;

namespace {

ModeSet random_modes(std::size_t m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> w(0.5, 3.0), k(0.01, 0.2);
    ModeSet s;
    for (std::size_t i = 0; i < m; ++i) s.modes.push_back({w(rng), k(rng)});
    return s;
}

core::GeneralizedHolsteinModel one_site(const ModeSet& modes)
{
    std::vector<core::Mode> ms;
    for (const auto& m : modes.modes) ms.push_back({m.omega, (m.kappa / m.omega) * (m.kappa / m.omega)});
    return {Eigen::MatrixXd::Zero(1, 1), {0.0}, {0.0}, {ms}};
}

core::TruncationSpec fock(std::size_t d)
{
    core::TruncationSpec t;
    t.fock_dim = d;
    return t;
}

}  // namespace

TEST(Partition, ChlorosomeShape)
{
    const auto modes = random_modes(253, 5);
    const auto parts = partition(modes, 6);
    std::size_t longest = 0, total = 0;
    for (const auto& p : parts) {
        longest = std::max(longest, p.size());
        total += p.size();
    }
    EXPECT_EQ(longest, 43u);
    EXPECT_EQ(total, 253u);
    const auto bath = transform(modes, 6);
    EXPECT_EQ(bath.max_length(), 43u);
    EXPECT_EQ(bath.oscillator_count(), 253u);
}

TEST(Partition, TrivialCases)
{
    const auto modes = random_modes(4, 1);
    const auto one = transform(modes, 1);
    ASSERT_EQ(one.chains.size(), 1u);
    EXPECT_EQ(one.chains[0].length(), 4u);
    const auto four = transform(modes, 4);
    ASSERT_EQ(four.chains.size(), 4u);
    std::vector<double> freqs;
    for (const auto& c : four.chains) {
        EXPECT_EQ(c.length(), 1u);
        freqs.push_back(c.site_freq[0]);
    }
    std::vector<double> star;
    for (const auto& m : modes.modes) star.push_back(m.omega);
    std::sort(freqs.begin(), freqs.end());
    std::sort(star.begin(), star.end());
    EXPECT_EQ(freqs, star);
}

TEST(Partition, StableAndDeterministic)
{
    ModeSet ties{{{1.0, 0.1}, {1.0, 0.2}, {1.0, 0.3}, {0.5, 0.4}}};
    const auto p = partition(ties, 2, PartitionStrategy::contiguous);
    ASSERT_EQ(p[0].size(), 2u);
    EXPECT_EQ(p[0].modes[0].kappa, 0.4);
    EXPECT_EQ(p[0].modes[1].kappa, 0.1);
    EXPECT_EQ(p[1].modes[0].kappa, 0.2);
    const auto rr = partition(ties, 2);
    EXPECT_EQ(rr[0].modes[1].kappa, 0.2);
    EXPECT_EQ(rr[1].modes[0].kappa, 0.1);
}

TEST(StarToChain, SingleMode)
{
    const auto c = star_to_chain(ModeSet{{{1.0, 0.3}}});
    EXPECT_DOUBLE_EQ(c.head_coupling, 0.3);
    ASSERT_EQ(c.site_freq.size(), 1u);
    EXPECT_DOUBLE_EQ(c.site_freq[0], 1.0);
    EXPECT_TRUE(c.link_coupling.empty());
}

TEST(StarToChain, TwoModesByHand)
{
    const ModeSet s{{{1.0, 0.3}, {2.0, 0.4}}};
    const auto c = star_to_chain(s);
    // 2x2 Lanczos: m0 = 0.25, m1 = 0.41, m2 = 0.73
    const double m0 = 0.25, m1 = 0.41, m2 = 0.73;
    const double a1 = m1 / m0;
    const double b1 = std::sqrt(m2 / m0 - a1 * a1);
    EXPECT_NEAR(c.head_coupling, 0.5, 1e-15);
    ASSERT_EQ(c.length(), 2u);
    EXPECT_NEAR(c.site_freq[0], 1.64, 1e-14);
    EXPECT_NEAR(c.site_freq[1], 3.0 - a1, 1e-14);
    EXPECT_NEAR(c.link_coupling[0], b1, 1e-14);
}

TEST(StarToChain, DegenerateBreakdown)
{
    const auto c = star_to_chain(ModeSet{{{1.0, 0.3}, {1.0, 0.4}}});
    EXPECT_EQ(c.length(), 1u);
    EXPECT_TRUE(c.truncated);
    EXPECT_EQ(c.dropped_modes, 1u);
    EXPECT_NEAR(c.head_coupling, 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(c.site_freq[0], 1.0);
}

TEST(StarToChain, AllZeroCouplingsRejected)
{
    EXPECT_THROW(star_to_chain(ModeSet{{{1.0, 0.0}, {2.0, 0.0}}}), ValidationError);
}

TEST(StarToChain, MomentsAndSpectrumPreserved)
{
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto s = random_modes(3 + seed * 4, seed);
        const auto c = star_to_chain(s);
        ASSERT_FALSE(c.truncated);
        const int pmax = std::min<int>(2 * static_cast<int>(c.length()) - 1, 12);
        for (int p = 0; p <= pmax; ++p) {
            const double ms = star_moment(s, p);
            EXPECT_LT(std::abs(chain_moment(c, p) - ms) / std::abs(ms), 1e-8) << seed << " p=" << p;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c.tridiagonal());
        std::vector<double> star;
        for (const auto& m : s.modes) star.push_back(m.omega);
        std::sort(star.begin(), star.end());
        for (std::size_t k = 0; k < star.size(); ++k) EXPECT_NEAR(es.eigenvalues()(k), star[k], 1e-8);

        double norm2 = 0.0;
        for (const auto& m : s.modes) norm2 += m.kappa * m.kappa;
        EXPECT_LE(c.head_coupling, std::sqrt(norm2) * (1 + 1e-15));
    }
}

TEST(StarToChain, AgreesWithHouseholder)
{
    for (std::uint64_t seed = 11; seed <= 15; ++seed) {
        const auto s = random_modes(9, seed);
        const auto l = star_to_chain(s);
        const auto h = householder_chain(s);
        ASSERT_EQ(l.length(), h.length());
        EXPECT_NEAR(l.head_coupling, h.head_coupling, 1e-12);
        for (std::size_t k = 0; k < l.length(); ++k) EXPECT_NEAR(l.site_freq[k], h.site_freq[k], 1e-9);
        for (std::size_t k = 0; k + 1 < l.length(); ++k)
            EXPECT_NEAR(std::abs(l.link_coupling[k]), std::abs(h.link_coupling[k]), 1e-9);
    }
}

TEST(ChainJson, RoundTrip)
{
    const auto b = transform(random_modes(10, 3), 3);
    const auto back = chain_bath_from_json(to_json(b));
    ASSERT_EQ(back.chains.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(back.chains[i].head_coupling, b.chains[i].head_coupling);
        EXPECT_EQ(back.chains[i].site_freq, b.chains[i].site_freq);
        EXPECT_EQ(back.chains[i].link_coupling, b.chains[i].link_coupling);
    }
    EXPECT_TRUE(to_json(b)["chains"][0].contains("head_ghz"));
}

TEST(Equivalence, ThreeModesStarVersusChain)
{
    const ModeSet s{{{1.0, 0.04}, {1.5, 0.05}, {2.0, 0.03}}};
    const auto times = dynamics::time_grid(10.0, 0.05);
    const double d = chain_dynamics_equivalence(one_site(s), fock(5), times);
    EXPECT_LT(d, 1e-6);
}

TEST(Equivalence, TrivialCases)
{
    const auto times = dynamics::time_grid(5.0, 0.1);
    const ModeSet zero{{{1.0, 0.0}, {2.0, 0.0}}};
    EXPECT_EQ(chain_dynamics_equivalence(one_site(zero), fock(4), times), 0.0);
    const ModeSet single{{{1.3, 0.2}}};
    EXPECT_LT(chain_dynamics_equivalence(one_site(single), fock(6), times), 1e-12);
}
