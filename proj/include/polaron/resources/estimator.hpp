#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace polaron::resources {

/// Counts saturate here instead of wrapping.
inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// Number of auxiliary density operators of a hierarchy truncated at total
/// depth `depth` with K = n_sites * n_peaks * (1 + matsubara_terms)
/// dissipation channels: C(depth + K, K).
std::uint64_t ado_count(std::uint64_t n_sites, std::uint64_t n_peaks, std::uint64_t depth,
                        std::uint64_t matsubara_terms);

/// ADO storage only: count * n_sites^2 complex doubles.
std::uint64_t memory_bytes(std::uint64_t ado_count, std::uint64_t n_sites);

struct FrontierPoint {
    std::uint64_t n_sites = 0;
    std::uint64_t n_peaks = 0;  // largest feasible peak count
    std::uint64_t hierarchy_depth = 0;
    std::uint64_t ado_count = 0;
    std::uint64_t memory_bytes = 0;
    bool feasible = false;       // false when not even n_peaks = 0 fits
};

struct FrontierOptions {
    std::uint64_t depth = 4;
    std::uint64_t matsubara = 0;
    std::uint64_t min_sites = 1;
    std::uint64_t max_sites = 64;
    std::uint64_t max_peaks = 256;  // search ceiling
};

FrontierPoint evaluate(std::uint64_t n_sites, std::uint64_t n_peaks, std::uint64_t depth,
                       std::uint64_t matsubara, std::uint64_t budget_bytes);

std::vector<FrontierPoint> frontier(std::uint64_t budget_bytes, const FrontierOptions& options = {});

/// "n_sites,max_peaks,memory_bytes"
std::string frontier_csv(const std::vector<FrontierPoint>& points);

inline constexpr std::uint64_t kGigabyte = 1'000'000'000ULL;

}  // namespace polaron::resources
