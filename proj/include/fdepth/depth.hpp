#pragma once

#include <span>

#include "fdepth/types.hpp"

namespace fdepth {

// Band depth S_{n,J}: fraction of j-curve bands (j = 2..J) whose envelope
// contains the graph of x. J in {2,3}.
double band_depth(std::span<const double> x, const FunctionalSample& sample, int j_max);

// Generalized band depth GS_{n,J}: average proportion of grid points where
// x lies inside each band.
double generalized_band_depth(std::span<const double> x, const FunctionalSample& sample,
                              int j_max);

// Pair average of max(L_ab, L_ba) * [x inside the corrected band on its domain].
double corrected_band_depth(std::span<const double> x, const FunctionalSample& sample);

// Pair average of |corrected inside set| / V.
double corrected_generalized_band_depth(std::span<const double> x,
                                        const FunctionalSample& sample);

// Pair average of the longest consecutive inside stretch / V.
double gbd_inside(std::span<const double> x, const FunctionalSample& sample);

// Pair average of 1 - (longest consecutive outside stretch / V).
double gbd_outside(std::span<const double> x, const FunctionalSample& sample);

double depth_of(std::span<const double> x, const FunctionalSample& sample,
                DepthMethod method);

// Depth of every sample curve against the full sample (self-pairs included).
DepthVector depth_all(const FunctionalSample& sample, DepthMethod method);

// One pass over all pairs/triples shared by several methods.
std::vector<DepthVector> depth_all_multi(const FunctionalSample& sample,
                                         std::span<const DepthMethod> methods);

// Indices sorted by depth descending, ties by ascending curve index.
RankOrder rank_order(const DepthVector& depths);

// 1 + number of strictly deeper curves (tied depths share a rank).
std::vector<int> competition_ranks(const DepthVector& depths);

size_t deepest(const FunctionalSample& sample, DepthMethod method);

namespace detail {

// Per-pair precomputation over a reference index set, plus the integer
// accumulators a single test curve collects over all pairs/triples. Exposed
// for the resampling module, which runs the same pass per part.
struct PairPre {
    const double* lo;  // oriented lower curve (corrected-band branch rule)
    const double* hi;
    int32_t dom_count;  // domain size of the chosen orientation
    int32_t max_dom;    // max of the two dominance counts (weight numerator)
};

struct Needs {
    bool runs = false;       // gbd_in / gbd_out
    bool corrected = false;  // cbd / cgbd
    bool triples = false;    // bd j=3
    bool triple_counts = false;  // gbd j=3
};

Needs needs_for(std::span<const DepthMethod> methods);

std::vector<PairPre> precompute_pairs(const FunctionalSample& sample,
                                      std::span<const size_t> ref, Needs needs);

struct RawCounts {
    int64_t bd2_hits = 0;
    int64_t gbd2_points = 0;
    int64_t cbd_weight_hits = 0;
    int64_t cgbd_points = 0;
    int64_t run_in_points = 0;
    int64_t run_out_points = 0;
    int64_t bd3_hits = 0;
    int64_t gbd3_points = 0;
};

RawCounts accumulate_one(const FunctionalSample& sample, std::span<const size_t> ref,
                         std::span<const PairPre> pairs, std::span<const double> x,
                         Needs needs);

double depth_from_counts(const RawCounts& counts, DepthMethod method, size_t ref_n,
                         size_t v);

}  // namespace detail

}  // namespace fdepth
