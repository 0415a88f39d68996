#include "fdepth/resample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fdepth/depth.hpp"
#include "fdepth/parallel.hpp"

namespace fdepth {

std::vector<std::vector<size_t>> Partition::members() const {
    std::vector<std::vector<size_t>> parts(k);
    for (size_t i = 0; i < assignment.size(); ++i)
        parts[assignment[i]].push_back(i);
    return parts;
}

Partition random_partition(size_t n, int k, std::mt19937_64& rng) {
    if (k < 1)
        throw Error(Errc::bad_config, "K must be at least 1");
    if (n / size_t(k) < 2)
        throw Error(Errc::part_too_small,
                    "K = " + std::to_string(k) + " gives parts smaller than 2 for n = " +
                        std::to_string(n));
    std::vector<size_t> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), size_t(0));
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Partition partition;
    partition.k = k;
    partition.assignment.resize(n);
    for (size_t pos = 0; pos < n; ++pos)
        partition.assignment[shuffled[pos]] = int(pos % size_t(k));
    return partition;
}

namespace {

void check_partition(const Partition& partition, size_t n) {
    if (partition.assignment.size() != n)
        throw Error(Errc::mismatched_length, "partition covers " +
                                                 std::to_string(partition.assignment.size()) +
                                                 " curves, sample has " + std::to_string(n));
    for (int part : partition.assignment)
        if (part < 0 || part >= partition.k)
            throw Error(Errc::bad_indices, "part id out of range");
}

}  // namespace

double resampled_depth(std::span<const double> x, const FunctionalSample& sample,
                       const Partition& partition, DepthMethod method) {
    validate_sample(sample);
    check_partition(partition, sample.n);
    auto needs = detail::needs_for({&method, 1});
    double total = 0.0;
    for (const auto& part : partition.members()) {
        if (part.size() < 2)
            throw Error(Errc::part_too_small, "part has fewer than 2 curves");
        auto pairs = detail::precompute_pairs(sample, part, needs);
        auto counts = detail::accumulate_one(sample, part, pairs, x, needs);
        total += detail::depth_from_counts(counts, method, part.size(), sample.v());
    }
    return total / double(partition.k);
}

std::vector<DepthVector> resampled_depth_all_multi(const FunctionalSample& sample,
                                                   const Partition& partition,
                                                   std::span<const DepthMethod> methods) {
    validate_sample(sample);
    check_partition(partition, sample.n);
    auto parts = partition.members();
    auto needs = detail::needs_for(methods);
    for (const auto& part : parts) {
        if (part.size() < 2)
            throw Error(Errc::part_too_small, "part has fewer than 2 curves");
        for (const auto& method : methods)
            if ((method.family == DepthMethod::Family::bd ||
                 method.family == DepthMethod::Family::gbd) &&
                size_t(method.j) > part.size())
                throw Error(Errc::bad_j, "J = " + std::to_string(method.j) +
                                             " exceeds part size " +
                                             std::to_string(part.size()));
    }

    std::vector<std::vector<detail::PairPre>> part_pairs;
    part_pairs.reserve(parts.size());
    for (const auto& part : parts)
        part_pairs.push_back(detail::precompute_pairs(sample, part, needs));

    std::vector<DepthVector> results(methods.size());
    for (size_t m = 0; m < methods.size(); ++m) {
        results[m].method = methods[m];
        results[m].values.assign(sample.n, 0.0);
    }
    parallel_for(0, sample.n, [&](size_t i) {
        auto x = sample.curve(i);
        for (size_t p = 0; p < parts.size(); ++p) {
            auto counts = detail::accumulate_one(sample, parts[p], part_pairs[p], x, needs);
            for (size_t m = 0; m < methods.size(); ++m)
                results[m].values[i] += detail::depth_from_counts(
                    counts, methods[m], parts[p].size(), sample.v());
        }
        for (size_t m = 0; m < methods.size(); ++m)
            results[m].values[i] /= double(partition.k);
    });
    return results;
}

namespace {

// Ascending average ranks (ties share the mean of their positions).
std::vector<double> average_ranks(std::span<const double> values) {
    size_t n = values.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t(0));
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t pos = 0;
    while (pos < n) {
        size_t tie_end = pos + 1;
        while (tie_end < n && values[order[tie_end]] == values[order[pos]])
            ++tie_end;
        double shared = (double(pos) + double(tie_end - 1)) / 2.0 + 1.0;
        for (size_t t = pos; t < tie_end; ++t)
            ranks[order[t]] = shared;
        pos = tie_end;
    }
    return ranks;
}

double pearson(std::span<const double> a, std::span<const double> b) {
    size_t n = a.size();
    if (n < 2)
        return 0.0;
    double mean_a = 0.0, mean_b = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= double(n);
    mean_b /= double(n);
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double da = a[i] - mean_a;
        double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        return 0.0;
    return cov / std::sqrt(var_a * var_b);
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw Error(Errc::mismatched_length, "correlation inputs differ in length");
    auto ranks_a = average_ranks(a);
    auto ranks_b = average_ranks(b);
    return pearson(ranks_a, ranks_b);
}

std::vector<RankAgreementReport> rank_agreement_study(const RankAgreementConfig& cfg) {
    if (cfg.repeats < 1 || cfg.n < 2 || cfg.methods.empty())
        throw Error(Errc::bad_config, "need repeats >= 1, n >= 2 and a method list");

    size_t n = cfg.n;
    size_t n_methods = cfg.methods.size();
    size_t reps = size_t(cfg.repeats);
    size_t subset = std::max(size_t(2), size_t(std::floor(double(n) * cfg.subset_share)));

    Grid grid = canonical_grid(cfg.v);
    ContaminationConfig base;
    base.model_id = 0;
    base.base = cfg.gp;
    base.slope = cfg.slope;
    StreamKey root{cfg.seed};

    // [method][repeat] reordered resampled ranks plus the three correlations.
    std::vector<std::vector<std::vector<double>>> reordered(
        n_methods, std::vector<std::vector<double>>(reps));
    std::vector<std::vector<double>> corr(n_methods, std::vector<double>(reps)),
        corr_deep(n_methods, std::vector<double>(reps)),
        corr_tail(n_methods, std::vector<double>(reps));

    parallel_for(0, reps, [&](size_t rep) {
        StreamKey key = root.child(rep);
        LabeledSample labeled = generate_model(base, n, grid, key.child(stream::data));
        auto partition_rng = key.child(stream::partition).rng();
        Partition partition = random_partition(n, cfg.k_parts, partition_rng);

        auto full = depth_all_multi(labeled.sample, cfg.methods);
        auto resampled = resampled_depth_all_multi(labeled.sample, partition, cfg.methods);

        for (size_t m = 0; m < n_methods; ++m) {
            RankOrder full_order = rank_order(full[m]);
            RankOrder res_order = rank_order(resampled[m]);
            std::vector<double> res_rank(n);
            for (size_t pos = 0; pos < n; ++pos)
                res_rank[res_order.order[pos]] = double(pos + 1);
            auto& slot = reordered[m][rep];
            slot.resize(n);
            for (size_t pos = 0; pos < n; ++pos)
                slot[pos] = res_rank[full_order.order[pos]];

            auto full_avg = average_ranks(full[m].values);
            auto res_avg = average_ranks(resampled[m].values);
            corr[m][rep] = pearson(full_avg, res_avg);

            std::vector<double> sub_full, sub_res;
            sub_full.reserve(subset);
            sub_res.reserve(subset);
            for (size_t pos = 0; pos < subset; ++pos) {
                size_t curve = full_order.order[pos];
                sub_full.push_back(full_avg[curve]);
                sub_res.push_back(res_avg[curve]);
            }
            corr_deep[m][rep] = pearson(sub_full, sub_res);
            sub_full.clear();
            sub_res.clear();
            for (size_t pos = n - subset; pos < n; ++pos) {
                size_t curve = full_order.order[pos];
                sub_full.push_back(full_avg[curve]);
                sub_res.push_back(res_avg[curve]);
            }
            corr_tail[m][rep] = pearson(sub_full, sub_res);
        }
    });

    std::vector<RankAgreementReport> reports(n_methods);
    for (size_t m = 0; m < n_methods; ++m) {
        auto& report = reports[m];
        report.method = cfg.methods[m];
        report.mean_rank.assign(n, 0.0);
        report.sd_rank.assign(n, 0.0);
        for (size_t rep = 0; rep < reps; ++rep)
            for (size_t pos = 0; pos < n; ++pos)
                report.mean_rank[pos] += reordered[m][rep][pos];
        for (size_t pos = 0; pos < n; ++pos)
            report.mean_rank[pos] /= double(reps);
        if (reps >= 2) {
            for (size_t pos = 0; pos < n; ++pos) {
                double ss = 0.0;
                for (size_t rep = 0; rep < reps; ++rep) {
                    double diff = reordered[m][rep][pos] - report.mean_rank[pos];
                    ss += diff * diff;
                }
                report.sd_rank[pos] = std::sqrt(ss / double(reps - 1));
            }
        }
        report.correlation = std::move(corr[m]);
        report.correlation_deep = std::move(corr_deep[m]);
        report.correlation_tail = std::move(corr_tail[m]);
    }
    return reports;
}

}  // namespace fdepth
