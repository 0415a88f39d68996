#include "fdepth/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "fdepth/depth.hpp"

namespace fdepth {

Curve mean_curve(const FunctionalSample& sample) {
    if (sample.n == 0)
        throw Error(Errc::too_few_curves, "mean of an empty sample");
    size_t v = sample.v();
    Curve mean(v, 0.0);
    for (size_t i = 0; i < sample.n; ++i) {
        auto curve = sample.curve(i);
        for (size_t k = 0; k < v; ++k)
            mean[k] += curve[k];
    }
    for (size_t k = 0; k < v; ++k)
        mean[k] /= double(sample.n);
    return mean;
}

namespace {

size_t integer_part(double x) {
    // floor with a hair of slack so that values like 10 * 0.3 land on 3.
    return size_t(std::floor(x + 1e-9));
}

}  // namespace

TrimSpec make_trim_spec(size_t n, double alpha, DepthMethod method) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw Error(Errc::bad_config,
                    "alpha must lie in [0,1), got " + std::to_string(alpha));
    return {alpha, method, integer_part(double(n) * alpha)};
}

Curve trimmed_mean(const FunctionalSample& sample, const DepthVector& depths,
                   double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw Error(Errc::bad_config,
                    "alpha must lie in [0,1), got " + std::to_string(alpha));
    if (depths.values.size() != sample.n)
        throw Error(Errc::mismatched_length,
                    "depth vector length " + std::to_string(depths.values.size()) +
                        " differs from n " + std::to_string(sample.n));
    size_t keep = sample.n - integer_part(double(sample.n) * alpha);
    RankOrder ranks = rank_order(depths);
    std::vector<size_t> kept(ranks.order.begin(), ranks.order.begin() + keep);
    std::sort(kept.begin(), kept.end());  // index order: alpha = 0 matches mean_curve

    size_t v = sample.v();
    Curve mean(v, 0.0);
    for (size_t idx : kept) {
        auto curve = sample.curve(idx);
        for (size_t k = 0; k < v; ++k)
            mean[k] += curve[k];
    }
    for (size_t k = 0; k < v; ++k)
        mean[k] /= double(keep);
    return mean;
}

double integrated_error(std::span<const double> estimate,
                        const std::function<double(double)>& truth, const Grid& grid) {
    if (estimate.size() != grid.size())
        throw Error(Errc::grid_mismatch,
                    "estimate has " + std::to_string(estimate.size()) +
                        " values, grid has " + std::to_string(grid.size()));
    double total = 0.0;
    for (size_t k = 0; k < grid.size(); ++k) {
        double diff = estimate[k] - truth(grid.points[k]);
        total += diff * diff;
    }
    return total / double(grid.size());
}

ErrorTable adjust_errors(ErrorTable table) {
    size_t rows = table.ei.size();
    if (rows == 0)
        return table;
    size_t reps = table.ei.front().size();
    for (const auto& row : table.ei)
        if (row.size() != reps)
            throw Error(Errc::mismatched_length, "ragged error table");

    table.eai.assign(rows, std::vector<double>(reps, 0.0));
    for (size_t r = 0; r < reps; ++r) {
        double lowest = table.ei[0][r];
        for (size_t row = 1; row < rows; ++row)
            lowest = std::min(lowest, table.ei[row][r]);
        for (size_t row = 0; row < rows; ++row)
            table.eai[row][r] = table.ei[row][r] - lowest;
    }

    table.mean.assign(rows, 0.0);
    table.sd.assign(rows, 0.0);
    for (size_t row = 0; row < rows; ++row) {
        double sum = 0.0;
        for (double value : table.eai[row])
            sum += value;
        double mean = reps > 0 ? sum / double(reps) : 0.0;
        table.mean[row] = mean;
        if (reps >= 2) {
            double ss = 0.0;
            for (double value : table.eai[row])
                ss += (value - mean) * (value - mean);
            table.sd[row] = std::sqrt(ss / double(reps - 1));
        }
    }
    return table;
}

}  // namespace fdepth
