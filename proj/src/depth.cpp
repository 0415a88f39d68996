#include "fdepth/depth.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "fdepth/kernels.hpp"
#include "fdepth/parallel.hpp"

namespace fdepth {

namespace detail {

Needs needs_for(std::span<const DepthMethod> methods) {
    Needs needs;
    for (const auto& method : methods) {
        using F = DepthMethod::Family;
        switch (method.family) {
            case F::bd:
                if (method.j >= 3) needs.triples = true;
                break;
            case F::gbd:
                if (method.j >= 3) needs.triple_counts = true;
                break;
            case F::cbd:
            case F::cgbd:
                needs.corrected = true;
                break;
            case F::gbd_in:
            case F::gbd_out:
                needs.runs = true;
                break;
        }
    }
    return needs;
}

std::vector<PairPre> precompute_pairs(const FunctionalSample& sample,
                                      std::span<const size_t> ref, Needs needs) {
    const auto& kern = kernels::active_kernels();
    size_t m = ref.size();
    int v = int(sample.v());
    std::vector<PairPre> pairs;
    pairs.reserve(m * (m - 1) / 2);
    for (size_t a = 0; a < m; ++a) {
        const double* ca = sample.curve(ref[a]).data();
        for (size_t b = a + 1; b < m; ++b) {
            const double* cb = sample.curve(ref[b]).data();
            PairPre pre{ca, cb, 0, 0};
            if (needs.corrected) {
                int ge_ab = 0, ge_ba = 0;
                kern.dominance_counts(ca, cb, v, &ge_ab, &ge_ba);
                // L_ab >= 1/2 keeps a as the lower curve; exact integer test.
                if (2 * ge_ab >= v) {
                    pre.dom_count = ge_ab;
                } else {
                    pre.lo = cb;
                    pre.hi = ca;
                    pre.dom_count = ge_ba;
                }
                pre.max_dom = std::max(ge_ab, ge_ba);
            }
            pairs.push_back(pre);
        }
    }
    return pairs;
}

RawCounts accumulate_one(const FunctionalSample& sample, std::span<const size_t> ref,
                         std::span<const PairPre> pairs, std::span<const double> x,
                         Needs needs) {
    const auto& kern = kernels::active_kernels();
    int v = int(sample.v());
    int words = (v + 63) / 64;
    std::array<uint64_t, 16> stack_bits;
    std::vector<uint64_t> heap_bits;
    uint64_t* bits = stack_bits.data();
    if (words > int(stack_bits.size())) {
        heap_bits.resize(words);
        bits = heap_bits.data();
    }

    RawCounts counts;
    const double* xp = x.data();
    for (const PairPre& pre : pairs) {
        int inside = 0, corrected = 0;
        kern.pair_inside_bits(pre.lo, pre.hi, xp, v, bits, &inside, &corrected);
        counts.gbd2_points += inside;
        counts.bd2_hits += inside == v;
        if (needs.corrected) {
            counts.cgbd_points += corrected;
            if (corrected == pre.dom_count)
                counts.cbd_weight_hits += pre.max_dom;
        }
        if (needs.runs) {
            counts.run_in_points += kernels::longest_one_run(bits, v);
            counts.run_out_points += kernels::longest_zero_run(bits, v);
        }
    }

    if (needs.triples || needs.triple_counts) {
        size_t m = ref.size();
        for (size_t a = 0; a < m; ++a) {
            const double* ca = sample.curve(ref[a]).data();
            for (size_t b = a + 1; b < m; ++b) {
                const double* cb = sample.curve(ref[b]).data();
                for (size_t c = b + 1; c < m; ++c) {
                    const double* cc = sample.curve(ref[c]).data();
                    if (needs.triple_counts) {
                        int inside = kern.band3_inside_count(ca, cb, cc, xp, v);
                        counts.gbd3_points += inside;
                        counts.bd3_hits += inside == v;
                    } else {
                        counts.bd3_hits += kern.band3_contains(ca, cb, cc, xp, v);
                    }
                }
            }
        }
    }
    return counts;
}

double depth_from_counts(const RawCounts& counts, DepthMethod method, size_t ref_n,
                         size_t v) {
    double c2 = double(ref_n) * double(ref_n - 1) / 2.0;
    double dv = double(v);
    using F = DepthMethod::Family;
    switch (method.family) {
        case F::bd: {
            double value = double(counts.bd2_hits) / c2;
            if (method.j >= 3) {
                double c3 = c2 * double(ref_n - 2) / 3.0;
                value += double(counts.bd3_hits) / c3;
            }
            return value;
        }
        case F::gbd: {
            double value = double(counts.gbd2_points) / (dv * c2);
            if (method.j >= 3) {
                double c3 = c2 * double(ref_n - 2) / 3.0;
                value += double(counts.gbd3_points) / (dv * c3);
            }
            return value;
        }
        case F::cbd:
            return double(counts.cbd_weight_hits) / (dv * c2);
        case F::cgbd:
            return double(counts.cgbd_points) / (dv * c2);
        case F::gbd_in:
            return double(counts.run_in_points) / (dv * c2);
        case F::gbd_out:
            return 1.0 - double(counts.run_out_points) / (dv * c2);
    }
    return 0.0;
}

}  // namespace detail

namespace {

void check_j(int j, size_t n) {
    if (j < 2 || j > 3)
        throw Error(Errc::bad_j, "J must be 2 or 3, got " + std::to_string(j));
    if (size_t(j) > n)
        throw Error(Errc::bad_j, "J = " + std::to_string(j) +
                                     " exceeds sample size " + std::to_string(n));
}

void check_method(DepthMethod method, size_t n) {
    using F = DepthMethod::Family;
    if (method.family == F::bd || method.family == F::gbd)
        check_j(method.j, n);
    else if (n < 2)
        throw Error(Errc::too_few_curves, "depth needs at least 2 curves");
}

void check_test_curve(std::span<const double> x, const FunctionalSample& sample) {
    if (x.size() != sample.v())
        throw Error(Errc::mismatched_length,
                    "test curve has " + std::to_string(x.size()) + " values, grid has " +
                        std::to_string(sample.v()));
}

std::vector<size_t> full_index(size_t n) {
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t(0));
    return idx;
}

double depth_one(std::span<const double> x, const FunctionalSample& sample,
                 DepthMethod method) {
    validate_sample(sample);
    check_method(method, sample.n);
    check_test_curve(x, sample);
    auto ref = full_index(sample.n);
    auto needs = detail::needs_for({&method, 1});
    auto pairs = detail::precompute_pairs(sample, ref, needs);
    auto counts = detail::accumulate_one(sample, ref, pairs, x, needs);
    return detail::depth_from_counts(counts, method, sample.n, sample.v());
}

}  // namespace

double band_depth(std::span<const double> x, const FunctionalSample& sample, int j_max) {
    return depth_one(x, sample, {DepthMethod::Family::bd, j_max});
}

double generalized_band_depth(std::span<const double> x, const FunctionalSample& sample,
                              int j_max) {
    return depth_one(x, sample, {DepthMethod::Family::gbd, j_max});
}

double corrected_band_depth(std::span<const double> x, const FunctionalSample& sample) {
    return depth_one(x, sample, {DepthMethod::Family::cbd, 2});
}

double corrected_generalized_band_depth(std::span<const double> x,
                                        const FunctionalSample& sample) {
    return depth_one(x, sample, {DepthMethod::Family::cgbd, 2});
}

double gbd_inside(std::span<const double> x, const FunctionalSample& sample) {
    return depth_one(x, sample, {DepthMethod::Family::gbd_in, 2});
}

double gbd_outside(std::span<const double> x, const FunctionalSample& sample) {
    return depth_one(x, sample, {DepthMethod::Family::gbd_out, 2});
}

double depth_of(std::span<const double> x, const FunctionalSample& sample,
                DepthMethod method) {
    return depth_one(x, sample, method);
}

DepthVector depth_all(const FunctionalSample& sample, DepthMethod method) {
    auto results = depth_all_multi(sample, {&method, 1});
    return std::move(results.front());
}

std::vector<DepthVector> depth_all_multi(const FunctionalSample& sample,
                                         std::span<const DepthMethod> methods) {
    validate_sample(sample);
    for (const auto& method : methods)
        check_method(method, sample.n);
    auto ref = full_index(sample.n);
    auto needs = detail::needs_for(methods);
    auto pairs = detail::precompute_pairs(sample, ref, needs);

    std::vector<DepthVector> results(methods.size());
    for (size_t m = 0; m < methods.size(); ++m) {
        results[m].method = methods[m];
        results[m].values.resize(sample.n);
    }
    parallel_for(0, sample.n, [&](size_t i) {
        auto counts = detail::accumulate_one(sample, ref, pairs, sample.curve(i), needs);
        for (size_t m = 0; m < methods.size(); ++m)
            results[m].values[i] =
                detail::depth_from_counts(counts, methods[m], sample.n, sample.v());
    });
    return results;
}

RankOrder rank_order(const DepthVector& depths) {
    RankOrder ranks;
    ranks.order.resize(depths.values.size());
    std::iota(ranks.order.begin(), ranks.order.end(), size_t(0));
    std::sort(ranks.order.begin(), ranks.order.end(), [&](size_t a, size_t b) {
        if (depths.values[a] != depths.values[b])
            return depths.values[a] > depths.values[b];
        return a < b;
    });
    return ranks;
}

std::vector<int> competition_ranks(const DepthVector& depths) {
    std::vector<double> sorted = depths.values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<int> ranks(depths.values.size());
    for (size_t i = 0; i < depths.values.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), depths.values[i],
                                   std::greater<>());
        ranks[i] = int(it - sorted.begin()) + 1;
    }
    return ranks;
}

size_t deepest(const FunctionalSample& sample, DepthMethod method) {
    return rank_order(depth_all(sample, method)).order.front();
}

}  // namespace fdepth
