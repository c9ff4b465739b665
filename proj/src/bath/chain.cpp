#include "polaron/bath/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polaron/dynamics/observables.hpp"
#include "polaron/dynamics/propagate.hpp"
#include "polaron/error.hpp"

namespace polaron::bath {

Eigen::MatrixXd Chain::tridiagonal() const
{
    const auto n = static_cast<Eigen::Index>(site_freq.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        t(i, i) = site_freq[static_cast<std::size_t>(i)];
        if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = link_coupling[static_cast<std::size_t>(i)];
    }
    return t;
}

std::size_t ChainBath::oscillator_count() const
{
    std::size_t n = 0;
    for (const Chain& c : chains) n += c.length();
    return n;
}

std::size_t ChainBath::max_length() const
{
    std::size_t n = 0;
    for (const Chain& c : chains) n = std::max(n, c.length());
    return n;
}

std::vector<ModeSet> partition(const ModeSet& modes, std::size_t n_chains, PartitionStrategy strategy)
{
    modes.validate();
    require(n_chains >= 1, "need at least one chain");
    const std::size_t m = modes.size();
    require(n_chains <= m, "cannot split " + std::to_string(m) + " modes into " + std::to_string(n_chains) + " chains");

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return modes.modes[a].omega < modes.modes[b].omega; });

    std::vector<ModeSet> out(n_chains);
    if (strategy == PartitionStrategy::round_robin) {
        for (std::size_t i = 0; i < m; ++i) out[i % n_chains].modes.push_back(modes.modes[order[i]]);
    } else {
        const std::size_t base = m / n_chains;
        const std::size_t extra = m % n_chains;
        std::size_t pos = 0;
        for (std::size_t c = 0; c < n_chains; ++c) {
            const std::size_t len = base + (c < extra ? 1 : 0);
            for (std::size_t i = 0; i < len; ++i) out[c].modes.push_back(modes.modes[order[pos++]]);
        }
    }
    return out;
}

namespace {

Eigen::VectorXd coupling_vector(const ModeSet& modes)
{
    modes.validate();
    require(modes.size() >= 1, "star_to_chain needs at least one mode");
    Eigen::VectorXd kappa(static_cast<Eigen::Index>(modes.size()));
    for (std::size_t k = 0; k < modes.size(); ++k) kappa(static_cast<Eigen::Index>(k)) = modes.modes[k].kappa;
    require(kappa.norm() > 0.0, "all couplings are zero; nothing to transform");
    return kappa;
}

Eigen::VectorXd frequency_vector(const ModeSet& modes)
{
    Eigen::VectorXd w(static_cast<Eigen::Index>(modes.size()));
    for (std::size_t k = 0; k < modes.size(); ++k) w(static_cast<Eigen::Index>(k)) = modes.modes[k].omega;
    return w;
}

}  // namespace

Chain star_to_chain(const ModeSet& modes)
{
    const Eigen::VectorXd kappa = coupling_vector(modes);
    const Eigen::VectorXd omega = frequency_vector(modes);
    const Eigen::Index m = omega.size();
    const double breakdown = 1e-12 * omega.norm();

    Chain chain;
    chain.head_coupling = kappa.norm();
    Eigen::MatrixXd v(m, m);
    v.col(0) = kappa / chain.head_coupling;
    for (Eigen::Index j = 0; j < m; ++j) {
        Eigen::VectorXd w = omega.cwiseProduct(v.col(j));
        const double a = v.col(j).dot(w);
        chain.site_freq.push_back(a);
        if (j + 1 == m) break;
        w -= a * v.col(j);
        if (j > 0) w -= chain.link_coupling.back() * v.col(j - 1);
        for (int pass = 0; pass < 2; ++pass) w -= v.leftCols(j + 1) * (v.leftCols(j + 1).transpose() * w);
        const double b = w.norm();
        if (b < breakdown) {
            chain.truncated = true;
            chain.dropped_modes = static_cast<std::size_t>(m - j - 1);
            break;
        }
        chain.link_coupling.push_back(b);
        v.col(j + 1) = w / b;
    }
    return chain;
}

Chain householder_chain(const ModeSet& modes)
{
    const Eigen::VectorXd kappa = coupling_vector(modes);
    const Eigen::VectorXd omega = frequency_vector(modes);
    const Eigen::Index m = omega.size();

    Chain chain;
    chain.head_coupling = kappa.norm();
    if (m == 1) {
        chain.site_freq.push_back(omega(0));
        return chain;
    }
    // Q e_1 = +-kappa/|kappa|
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(kappa);
    const Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd rotated = q.transpose() * omega.asDiagonal() * q;
    // Householder tridiagonalisation acts on rows/cols 2..m, leaving e_1 fixed.
    const Eigen::Tridiagonalization<Eigen::MatrixXd> tri(rotated);
    const Eigen::VectorXd diag = tri.diagonal();
    const Eigen::VectorXd sub = tri.subDiagonal();
    for (Eigen::Index i = 0; i < m; ++i) chain.site_freq.push_back(diag(i));
    for (Eigen::Index i = 0; i + 1 < m; ++i) chain.link_coupling.push_back(std::abs(sub(i)));
    return chain;
}

ChainBath transform(const ModeSet& modes, std::size_t n_chains, PartitionStrategy strategy)
{
    ChainBath bath;
    for (const ModeSet& part : partition(modes, n_chains, strategy)) bath.chains.push_back(star_to_chain(part));
    return bath;
}

double star_moment(const ModeSet& modes, int p)
{
    double m = 0.0;
    for (const auto& mode : modes.modes) m += mode.kappa * mode.kappa * std::pow(mode.omega, p);
    return m;
}

double chain_moment(const Chain& chain, int p)
{
    const Eigen::MatrixXd t = chain.tridiagonal();
    Eigen::VectorXd e = Eigen::VectorXd::Zero(t.rows());
    e(0) = 1.0;
    Eigen::VectorXd x = e;
    for (int i = 0; i < p; ++i) x = t * x;
    return chain.head_coupling * chain.head_coupling * x(0);
}

nlohmann::json to_json(const ChainBath& bath)
{
    nlohmann::json doc;
    doc["chains"] = nlohmann::json::array();
    for (const Chain& c : bath.chains) {
        nlohmann::json j;
        j["head_ghz"] = c.head_coupling;
        j["omegas_ghz"] = c.site_freq;
        j["links_ghz"] = c.link_coupling;
        if (c.truncated) {
            j["truncated"] = true;
            j["dropped_modes"] = c.dropped_modes;
        }
        doc["chains"].push_back(j);
    }
    return doc;
}

ChainBath chain_bath_from_json(const nlohmann::json& doc)
{
    require(doc.is_object() && doc.contains("chains") && doc["chains"].is_array(),
            "chain bath: expected {\"chains\": [...]}");
    ChainBath bath;
    for (const auto& j : doc["chains"]) {
        require(j.is_object() && j.contains("head_ghz") && j.contains("omegas_ghz") && j.contains("links_ghz"),
                "chain bath: each chain needs head_ghz, omegas_ghz and links_ghz");
        Chain c;
        try {
            c.head_coupling = j["head_ghz"].get<double>();
            c.site_freq = j["omegas_ghz"].get<std::vector<double>>();
            c.link_coupling = j["links_ghz"].get<std::vector<double>>();
            c.truncated = j.value("truncated", false);
            c.dropped_modes = j.value("dropped_modes", std::size_t{0});
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("chain bath: ") + e.what());
        }
        require(!c.site_freq.empty(), "chain bath: empty chain");
        require(c.link_coupling.size() + 1 == c.site_freq.size(), "chain bath: need L-1 links for L oscillators");
        for (double w : c.site_freq) require(w > 0.0, "chain bath: oscillator frequencies must be positive");
        bath.chains.push_back(std::move(c));
    }
    return bath;
}

core::OscillatorNetwork chain_network(const Eigen::MatrixXd& coupling, std::span<const ChainBath> site_baths)
{
    require(static_cast<std::size_t>(coupling.rows()) == site_baths.size(), "one chain bath per site required");
    core::OscillatorNetwork net;
    net.coupling = coupling;
    for (std::size_t s = 0; s < site_baths.size(); ++s) {
        for (const Chain& c : site_baths[s].chains) {
            const std::size_t first = net.oscillators.size();
            for (std::size_t i = 0; i < c.length(); ++i) {
                net.oscillators.push_back({s, c.site_freq[i], i == 0 ? c.head_coupling : 0.0});
                if (i > 0) net.links.push_back({first + i - 1, first + i, c.link_coupling[i - 1]});
            }
        }
    }
    return net;
}

double chain_dynamics_equivalence(const core::GeneralizedHolsteinModel& model, const core::TruncationSpec& trunc,
                                  std::span<const double> times, const EquivalenceOptions& options)
{
    require(model.n_sites() == 1, "chain equivalence is defined for a single site");
    core::TruncationSpec tr = trunc;
    tr.sector = core::Sector::full_two_level;

    ModeSet modes;
    for (const core::Mode& m : model.modes(0)) modes.modes.push_back({m.omega, m.kappa()});

    const core::OscillatorNetwork star = core::network_of(model);
    core::OscillatorNetwork chain_form;
    chain_form.coupling = model.coupling();
    const bool coupled = std::any_of(modes.modes.begin(), modes.modes.end(), [](const auto& m) { return m.kappa > 0.0; });
    if (coupled) {
        const ChainBath bath = transform(modes, options.n_chains);
        chain_form = chain_network(model.coupling(), std::span<const ChainBath>(&bath, 1));
    }
    // A decoupled bath leaves no oscillator attached in chain form.

    auto run = [&](const core::OscillatorNetwork& net) {
        const core::SparseOperator h = core::assemble(net, tr);
        Eigen::VectorXcd el(2);
        el << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        const core::StateVector psi0 = dynamics::product_state(h.basis, el);
        dynamics::PropagationOptions opt;
        opt.keep_reduced = true;
        if (options.use_dense_oracle && h.dim() <= dynamics::kDenseOracleMaxDim) {
            return dynamics::dense_oracle(h, psi0, times, opt);
        }
        return dynamics::propagate(h, psi0, times, opt);
    };
    const dynamics::Trajectory a = run(star);
    const dynamics::Trajectory b = run(chain_form);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.reduced.size(); ++i) {
        worst = std::max(worst, dynamics::trace_distance(a.reduced[i], b.reduced[i]));
    }
    return worst;
}

}  // namespace polaron::bath
