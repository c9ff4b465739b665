#include "polaron/resources/estimator.hpp"

#include <algorithm>

#include "polaron/error.hpp"

namespace polaron::resources {

namespace {

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r = C(n - k + i - 1, i - 1) exactly; the product below is divisible by i
        r = r * (n - k + i) / i;
        if (r > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t ado_count(std::uint64_t n_sites, std::uint64_t n_peaks, std::uint64_t depth,
                        std::uint64_t matsubara_terms)
{
    const std::uint64_t channels = mul_sat(mul_sat(n_sites, n_peaks), matsubara_terms + 1);
    if (channels == kSaturated || depth > kSaturated - channels) return kSaturated;
    return binomial_sat(depth + channels, channels);
}

std::uint64_t memory_bytes(std::uint64_t ado_count, std::uint64_t n_sites)
{
    return mul_sat(mul_sat(ado_count, mul_sat(n_sites, n_sites)), 16);
}

FrontierPoint evaluate(std::uint64_t n_sites, std::uint64_t n_peaks, std::uint64_t depth,
                       std::uint64_t matsubara, std::uint64_t budget_bytes)
{
    FrontierPoint p;
    p.n_sites = n_sites;
    p.n_peaks = n_peaks;
    p.hierarchy_depth = depth;
    p.ado_count = ado_count(n_sites, n_peaks, depth, matsubara);
    p.memory_bytes = memory_bytes(p.ado_count, n_sites);
    p.feasible = p.memory_bytes != kSaturated && p.memory_bytes <= budget_bytes;
    return p;
}

std::vector<FrontierPoint> frontier(std::uint64_t budget_bytes, const FrontierOptions& options)
{
    require(budget_bytes > 0, "memory budget must be positive");
    require(options.min_sites >= 1 && options.min_sites <= options.max_sites, "invalid site range");
    std::vector<FrontierPoint> out;
    for (std::uint64_t n = options.min_sites; n <= options.max_sites; ++n) {
        FrontierPoint best = evaluate(n, 0, options.depth, options.matsubara, budget_bytes);
        if (best.feasible) {
            // memory is non-decreasing in n_peaks: bisect for the last feasible value
            std::uint64_t lo = 0;
            std::uint64_t hi = options.max_peaks;
            while (lo < hi) {
                const std::uint64_t mid = lo + (hi - lo + 1) / 2;
                if (evaluate(n, mid, options.depth, options.matsubara, budget_bytes).feasible) {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            best = evaluate(n, lo, options.depth, options.matsubara, budget_bytes);
        }
        out.push_back(best);
    }
    return out;
}

std::string frontier_csv(const std::vector<FrontierPoint>& points)
{
    std::string out = "n_sites,max_peaks,memory_bytes\n";
    for (const FrontierPoint& p : points) {
        out += std::to_string(p.n_sites) + "," + (p.feasible ? std::to_string(p.n_peaks) : std::string("-1")) + "," +
               std::to_string(p.memory_bytes) + "\n";
    }
    return out;
}

}  // namespace polaron::resources
