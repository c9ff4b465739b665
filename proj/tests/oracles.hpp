#pragma once

// Reference constructions used only by the tests. Each one is deliberately
// naive and shares no code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "polaron/core/model.hpp"

namespace oracle {

using Dense = Eigen::MatrixXcd;

inline Dense kron(const Dense& a, const Dense& b)
{
    Dense out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Dense ladder(int d)
{
    Dense a = Dense::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

/// Single-excitation Hamiltonian of a multi-mode model, written out as
/// sum of Kronecker products over [electron (N)] x [mode 1] x ... x [mode M].
inline Dense holstein_dense(const polaron::core::GeneralizedHolsteinModel& m, int d)
{
    const int n = static_cast<int>(m.n_sites());
    std::vector<std::pair<int, polaron::core::Mode>> modes;
    for (int s = 0; s < n; ++s)
        for (const auto& md : m.modes(s)) modes.push_back({s, md});
    const int nm = static_cast<int>(modes.size());

    auto embed = [&](const Dense& el, int slot, const Dense& local) {
        Dense out = el;
        for (int j = 0; j < nm; ++j) out = kron(out, j == slot ? local : Dense::Identity(d, d));
        return out;
    };
    long dim = n;
    for (int j = 0; j < nm; ++j) dim *= d;
    Dense h = Dense::Zero(dim, dim);

    Dense hel = Dense::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) hel(a, b) = m.coupling(a, b);
    h += embed(hel, -1, Dense());

    const Dense a = ladder(d);
    const Dense x = a + a.adjoint();
    const Dense num = a.adjoint() * a;
    for (int j = 0; j < nm; ++j) {
        const auto& [site, md] = modes[j];
        Dense sz = -Dense::Identity(n, n);
        sz(site, site) = 1.0;
        h += md.kappa() * embed(sz, j, x);
        h += md.omega * embed(Dense::Identity(n, n), j, num);
    }
    return h;
}

inline Eigen::VectorXd spectrum(const Dense& h)
{
    Eigen::SelfAdjointEigenSolver<Dense> es(h);
    return es.eigenvalues();
}

/// exp(-2 pi i H t) psi by full diagonalisation.
inline Eigen::VectorXcd evolve(const Dense& h, const Eigen::VectorXcd& psi, double t)
{
    Eigen::SelfAdjointEigenSolver<Dense> es(h);
    const double two_pi = 2.0 * 3.14159265358979323846;
    Eigen::VectorXcd c = es.eigenvectors().adjoint() * psi;
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(std::complex<double>(0.0, -two_pi * es.eigenvalues()(k) * t));
    return es.eigenvectors() * c;
}

/// Number of multi-indices n in N^K with |n| <= depth, by explicit recursion.
inline std::uint64_t count_multi_indices(int k, int depth)
{
    if (k == 0) return 1;
    std::uint64_t total = 0;
    for (int first = 0; first <= depth; ++first) total += count_multi_indices(k - 1, depth - first);
    return total;
}

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000)
{
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace oracle
