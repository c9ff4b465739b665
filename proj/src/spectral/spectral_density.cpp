#include "polaron/spectral/spectral_density.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "polaron/error.hpp"
#include "polaron/io.hpp"
#include "polaron/units.hpp"

namespace polaron::spectral {

SpectralDensity::SpectralDensity(Kind kind, std::vector<Sample> samples)
    : kind_(kind)
    , samples_(std::move(samples))
{
    require(!samples_.empty(), "no samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& s = samples_[i];
        require(std::isfinite(s.omega) && s.omega > 0.0, "frequencies must be positive");
        require(std::isfinite(s.value) && s.value >= 0.0, "spectral density values must be non-negative");
        if (i > 0) require(s.omega > samples_[i - 1].omega, "non-strictly-increasing frequency grid");
    }
}

double SpectralDensity::operator()(double omega) const
{
    if (omega < samples_.front().omega || omega > samples_.back().omega) return 0.0;
    const auto it = std::lower_bound(samples_.begin(), samples_.end(), omega,
                                     [](const Sample& s, double w) { return s.omega < w; });
    if (it->omega == omega) return it->value;
    const Sample& hi = *it;
    const Sample& lo = *(it - 1);
    const double f = (omega - lo.omega) / (hi.omega - lo.omega);
    return lo.value + f * (hi.value - lo.value);
}

void ModeSet::validate() const
{
    for (const auto& m : modes) {
        require(std::isfinite(m.omega) && m.omega > 0.0, "mode frequency must be positive");
        require(std::isfinite(m.kappa) && m.kappa >= 0.0, "mode coupling must be non-negative");
    }
}

double ModeSet::reorganization_energy() const
{
    double lambda = 0.0;
    for (const auto& m : modes) lambda += m.kappa * m.kappa / m.omega;
    return lambda;
}

SpectralDensity parse_csv(const std::string& text)
{
    const io::CsvTable table = io::parse_csv(text);
    require(!table.header.empty(), "no samples");
    const auto& h = table.header;
    require(h.size() == 2, "unknown header: expected two columns");

    double scale = 1.0;
    if (h[0] == "wavenumber_cm1") {
        scale = units::kGHzPerWavenumber;
    } else {
        require(h[0] == "omega_ghz", "unknown header \"" + h[0] + "," + h[1] + "\"");
    }
    const std::string unit = scale == 1.0 ? "ghz" : "cm1";
    Kind kind;
    if (h[1] == "value_" + unit) {
        kind = Kind::sampled_continuous;
    } else {
        require(h[1] == "kappa_" + unit, "unknown header \"" + h[0] + "," + h[1] + "\"");
        kind = Kind::discrete_modes;
    }

    std::vector<Sample> samples;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string where = "row " + std::to_string(r + 2);
        require(row.size() == 2, where + ": expected two columns");
        const double w = io::parse_double(row[0], where) * scale;
        double v = io::parse_double(row[1], where);
        require(v >= 0.0, where + ": negative value");
        v *= scale;
        samples.push_back({w, kind == Kind::discrete_modes ? v * v : v});
    }
    require(!samples.empty(), "no samples");
    return {kind, std::move(samples)};
}

SpectralDensity load_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_csv(text.str());
}

double thermal_factor(double omega, double temperature)
{
    require(temperature > 0.0, "temperature must be positive");
    require(omega != 0.0, "thermal factor is singular at omega = 0");
    const double two_x = std::abs(omega) / units::thermal_energy_ghz(temperature);  // h|w|/kT
    const double denom = -std::expm1(-two_x);                                         // 1 - e^{-2x}
    if (omega > 0.0) return 2.0 / denom;
    return -2.0 * std::exp(-two_x) / denom;
}

ThermalSpectralDensity thermal_transform(const SpectralDensity& density, double temperature)
{
    require(temperature > 0.0, "temperature must be positive");
    const auto& s = density.samples();
    ThermalSpectralDensity out;
    out.temperature = temperature;
    out.samples.reserve(2 * s.size() + 1);
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        // J^A(-w) = -J(w)
        out.samples.push_back({-it->omega, thermal_factor(-it->omega, temperature) * (-it->value)});
    }
    // omega -> 0+: (1 + coth) J -> 2 (k_B T / h) J'(0+), slope from the first sample.
    const double slope = s.front().value / s.front().omega;
    out.samples.push_back({0.0, 2.0 * units::thermal_energy_ghz(temperature) * slope});
    for (const Sample& x : s) out.samples.push_back({x.omega, thermal_factor(x.omega, temperature) * x.value});
    return out;
}

std::string thermal_csv(const ThermalSpectralDensity& thermal)
{
    std::string out = "omega_ghz,value_ghz\n";
    for (const Sample& s : thermal.samples) {
        out += io::format_number(s.omega) + "," + io::format_number(s.value) + "\n";
    }
    return out;
}

namespace {

double temperature_ratio(double t_source, double t_target)
{
    require(t_source > 0.0 && t_target > 0.0, "temperatures must be positive");
    return t_target / t_source;
}

}  // namespace

ModeSet rescale(const ModeSet& modes, double t_source, double t_target)
{
    const double f = temperature_ratio(t_source, t_target);
    ModeSet out = modes;
    for (auto& m : out.modes) {
        m.omega *= f;
        m.kappa *= f;
    }
    return out;
}

core::GeneralizedHolsteinModel rescale(const core::GeneralizedHolsteinModel& model, double t_source,
                                       double t_target)
{
    const double f = temperature_ratio(t_source, t_target);
    std::vector<double> eps = model.site_energy();
    std::vector<double> shift = model.shift();
    for (double& e : eps) e *= f;
    for (double& d : shift) d *= f;
    auto modes = model.modes();
    for (auto& site : modes) {
        for (auto& m : site) m.omega *= f;  // R is dimensionless and stays
    }
    return {model.coupling() * f, std::move(eps), std::move(shift), std::move(modes)};
}

namespace {

struct Segment {
    double x0, x1, y0, y1;
    double slope() const { return (y1 - y0) / (x1 - x0); }
    double at(double x) const { return y0 + slope() * (x - x0); }
};

template <typename F>
double over_segments(const SpectralDensity& d, double a, double b, F&& piece)
{
    require(d.kind() == Kind::sampled_continuous, "integration requires a sampled density");
    const auto& s = d.samples();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const Segment seg{s[i].omega, s[i + 1].omega, s[i].value, s[i + 1].value};
        const double lo = std::max(a, seg.x0);
        const double hi = std::min(b, seg.x1);
        if (hi > lo) total += piece(seg, lo, hi);
    }
    return total;
}

}  // namespace

double integrate(const SpectralDensity& density, double a, double b)
{
    return over_segments(density, a, b, [](const Segment& seg, double lo, double hi) {
        return 0.5 * (hi - lo) * (seg.at(lo) + seg.at(hi));
    });
}

double integrate_over_omega(const SpectralDensity& density, double a, double b)
{
    return over_segments(density, a, b, [](const Segment& seg, double lo, double hi) {
        // (c + s w) / w with c = y0 - s x0
        const double s = seg.slope();
        const double c = seg.y0 - s * seg.x0;
        return c * std::log(hi / lo) + s * (hi - lo);
    });
}

double reorganization_energy(const SpectralDensity& density)
{
    if (density.kind() == Kind::discrete_modes) {
        double lambda = 0.0;
        for (const Sample& s : density.samples()) lambda += s.value / s.omega;
        return lambda;
    }
    return integrate_over_omega(density, density.samples().front().omega, density.samples().back().omega);
}

namespace {

ModeEntry bin_mode(const SpectralDensity& d, double lo, double hi)
{
    const double weight = integrate(d, lo, hi);
    const double inverse = integrate_over_omega(d, lo, hi);
    if (weight <= 0.0 || inverse <= 0.0) return {0.5 * (lo + hi), 0.0};
    return {weight / inverse, std::sqrt(weight)};
}

/// Frequencies splitting the cumulative weight into n equal parts.
std::vector<double> equal_weight_edges(const SpectralDensity& d, std::size_t n)
{
    const auto& s = d.samples();
    const double total = integrate(d, s.front().omega, s.back().omega);
    require(total > 0.0, "spectral density has zero total weight");
    std::vector<double> edges{s.front().omega};
    double accumulated = 0.0;
    std::size_t seg = 0;
    for (std::size_t k = 1; k < n; ++k) {
        const double target = total * static_cast<double>(k) / static_cast<double>(n);
        while (seg + 1 < s.size()) {
            const Segment sg{s[seg].omega, s[seg + 1].omega, s[seg].value, s[seg + 1].value};
            const double piece = 0.5 * (sg.x1 - sg.x0) * (sg.y0 + sg.y1);
            if (accumulated + piece >= target) {
                // y0 u + slope u^2 / 2 = r, stable root
                const double r = target - accumulated;
                const double slope = sg.slope();
                const double disc = std::max(0.0, sg.y0 * sg.y0 + 2.0 * slope * r);
                const double denom = sg.y0 + std::sqrt(disc);
                const double u = denom > 0.0 ? 2.0 * r / denom : 0.0;
                edges.push_back(std::min(sg.x1, sg.x0 + u));
                break;
            }
            accumulated += piece;
            ++seg;
        }
        if (edges.size() <= k) edges.push_back(s.back().omega);
    }
    edges.push_back(s.back().omega);
    return edges;
}

}  // namespace

ModeSet to_mode_set(const SpectralDensity& density, std::size_t n_modes, Discretization scheme)
{
    require(n_modes >= 1, "need at least one mode");
    ModeSet out;
    if (scheme == Discretization::direct) {
        require(density.kind() == Kind::discrete_modes, "direct scheme needs a discrete mode list");
        require(n_modes <= density.size(), "requested " + std::to_string(n_modes) + " modes but only " +
                                               std::to_string(density.size()) + " lines are available");
        require(n_modes == density.size(), "direct scheme keeps every line; requested " +
                                               std::to_string(n_modes) + " of " + std::to_string(density.size()));
        for (const Sample& s : density.samples()) out.modes.push_back({s.omega, std::sqrt(s.value)});
        return out;
    }
    require(density.kind() == Kind::sampled_continuous, "binning schemes need a sampled density");
    require(density.size() >= 2, "binning needs at least two samples");
    const double lo = density.samples().front().omega;
    const double hi = density.samples().back().omega;

    std::vector<double> edges;
    if (scheme == Discretization::equal_weight) {
        edges = equal_weight_edges(density, n_modes);
    } else {
        for (std::size_t k = 0; k <= n_modes; ++k) {
            edges.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n_modes));
        }
        edges.back() = hi;
    }
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) out.modes.push_back(bin_mode(density, edges[k], edges[k + 1]));
    return out;
}

}  // namespace polaron::spectral
