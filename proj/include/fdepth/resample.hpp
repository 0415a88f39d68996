#pragma once

#include <random>
#include <span>
#include <vector>

#include "fdepth/simulate.hpp"
#include "fdepth/types.hpp"

namespace fdepth {

// Balanced assignment of curve indices to parts 0..k-1.
struct Partition {
    std::vector<int> assignment;
    int k = 1;

    std::vector<std::vector<size_t>> members() const;
};

// Uniform shuffle dealt round-robin; every part gets floor(n/k) or ceil(n/k)
// curves. Requires floor(n/k) >= 2.
Partition random_partition(size_t n, int k, std::mt19937_64& rng);

// (1/K) * sum_k D(x | X_k); x joins part k's enumeration when it is a member.
double resampled_depth(std::span<const double> x, const FunctionalSample& sample,
                       const Partition& partition, DepthMethod method);

// Resampled depths of every curve for several methods in one pass per part.
std::vector<DepthVector> resampled_depth_all_multi(const FunctionalSample& sample,
                                                   const Partition& partition,
                                                   std::span<const DepthMethod> methods);

// Spearman rank correlation with average ranks for ties; 0 when either side
// has no variation.
double spearman(std::span<const double> a, std::span<const double> b);

struct RankAgreementConfig {
    GpSpec gp{1.0, 1.0, 2.0};
    double slope = 4.0;  // mean g(t) = slope * t
    size_t n = 150;
    size_t v = 30;
    int k_parts = 10;
    int repeats = 50;  // B
    std::vector<DepthMethod> methods;
    uint64_t seed = 0;
    double subset_share = 0.2;  // deepest/least-deep correlation subsets
};

struct RankAgreementReport {
    DepthMethod method;
    // Resampled rank (1-based) of the curve at each full-data rank position,
    // aggregated across repeats.
    std::vector<double> mean_rank;
    std::vector<double> sd_rank;
    std::vector<double> correlation;       // per repeat, all curves
    std::vector<double> correlation_deep;  // deepest subset_share of positions
    std::vector<double> correlation_tail;  // least-deep subset_share
};

// The full-vs-resampled protocol: per repeat, draw n base-model curves, rank
// them with full-data and resampled depths, reorder the resampled ranks by the
// full-data order. Data and partitions are keyed by (seed, repeat) only, so
// every method sees identical samples.
std::vector<RankAgreementReport> rank_agreement_study(const RankAgreementConfig& cfg);

}  // namespace fdepth
