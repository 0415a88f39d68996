#include "fdepth/simulate.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fdepth/parallel.hpp"
#include "fdepth/resample.hpp"

namespace fdepth {

std::vector<double> gp_covariance(const Grid& grid, const GpSpec& spec) {
    if (spec.k <= 0.0 || spec.c <= 0.0 || spec.mu <= 0.0)
        throw Error(Errc::bad_config, "covariance parameters must be positive");
    size_t v = grid.size();
    std::vector<double> cov(v * v);
    for (size_t a = 0; a < v; ++a) {
        for (size_t b = 0; b <= a; ++b) {
            double gap = std::abs(grid.points[a] - grid.points[b]);
            double value = spec.k * std::exp(-spec.c * std::pow(gap, spec.mu));
            cov[a * v + b] = value;
            cov[b * v + a] = value;
        }
    }
    return cov;
}

GpFactor gp_factor(std::span<const double> cov, size_t v) {
    if (cov.size() != v * v)
        throw Error(Errc::grid_mismatch, "covariance is not V x V");
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const Matrix> mapped(cov.data(), Eigen::Index(v), Eigen::Index(v));
    static constexpr double jitters[] = {0.0, 1e-12, 1e-10, 1e-8};
    for (double jitter : jitters) {
        Matrix shifted = mapped;
        shifted.diagonal().array() += jitter;
        Eigen::LLT<Matrix> llt(shifted);
        if (llt.info() == Eigen::Success) {
            Matrix lower = llt.matrixL();
            GpFactor factor;
            factor.v = v;
            factor.jitter = jitter;
            factor.lower.assign(lower.data(), lower.data() + v * v);
            return factor;
        }
    }
    throw Error(Errc::not_factorizable,
                "covariance not positive definite even with 1e-8 jitter");
}

Curve sample_gp(const GpFactor& factor, const std::function<double(double)>& mean_fn,
                const Grid& grid, std::mt19937_64& rng) {
    size_t v = grid.size();
    if (factor.v != v)
        throw Error(Errc::grid_mismatch, "factor size differs from grid");
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> z(v);
    for (size_t k = 0; k < v; ++k)
        z[k] = normal(rng);
    Curve curve(v);
    for (size_t k = 0; k < v; ++k) {
        double noise = 0.0;
        const double* row = factor.lower.data() + k * v;
        for (size_t j = 0; j <= k; ++j)
            noise += row[j] * z[j];
        curve[k] = mean_fn(grid.points[k]) + noise;
    }
    return curve;
}

namespace {

double uniform01(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// k distinct grid indices via partial Fisher-Yates.
std::vector<size_t> draw_points(std::mt19937_64& rng, size_t v, size_t k) {
    std::vector<size_t> idx(v);
    std::iota(idx.begin(), idx.end(), size_t(0));
    for (size_t i = 0; i < k; ++i) {
        size_t j = i + std::uniform_int_distribution<size_t>(0, v - 1 - i)(rng);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace

LabeledSample generate_model(const ContaminationConfig& cfg, size_t n, const Grid& grid,
                             StreamKey key) {
    if (cfg.model_id < 0 || cfg.model_id > 6)
        throw Error(Errc::bad_model_id,
                    "model id must be 0..6, got " + std::to_string(cfg.model_id));
    if (cfg.q < 0.0 || cfg.q > 1.0)
        throw Error(Errc::bad_config, "q must lie in [0,1]");
    if (cfg.model_id == 4 && (cfg.peak_len <= 0.0 || cfg.peak_len >= 1.0))
        throw Error(Errc::bad_config, "peak length must lie in (0,1)");
    if (cfg.model_id == 5 &&
        (cfg.k_points < 1 || size_t(cfg.k_points) > grid.size()))
        throw Error(Errc::bad_config, "k_points must lie in 1..V");

    size_t v = grid.size();
    auto mean_fn = [slope = cfg.slope](double t) { return slope * t; };

    GpFactor base_factor, rough_factor;
    if (cfg.model_id == 6) {
        base_factor = gp_factor(gp_covariance(grid, cfg.smooth), v);
        rough_factor = gp_factor(gp_covariance(grid, cfg.rough), v);
    } else {
        base_factor = gp_factor(gp_covariance(grid, cfg.base), v);
    }

    LabeledSample out;
    out.sample.grid = grid;
    out.sample.n = n;
    out.sample.values.resize(n * v);
    out.sample.ids.reserve(n);
    out.contaminated.assign(n, 0);
    out.signs.assign(n, 1);

    for (size_t i = 0; i < n; ++i) {
        out.sample.ids.push_back(std::to_string(i));
        StreamKey curve_key = key.child(i);
        auto base_rng = curve_key.child(stream::base_noise).rng();
        Curve curve = sample_gp(base_factor, mean_fn, grid, base_rng);

        auto contam_rng = curve_key.child(stream::contamination).rng();
        switch (cfg.model_id) {
            case 0:
                break;
            case 1: {
                bool c = uniform01(contam_rng) < cfg.q;
                out.contaminated[i] = c;
                if (c)
                    for (double& value : curve)
                        value += cfg.m_size;
                break;
            }
            case 2: {
                bool c = uniform01(contam_rng) < cfg.q;
                int sign = uniform01(contam_rng) < 0.5 ? 1 : -1;
                out.contaminated[i] = c;
                out.signs[i] = int8_t(sign);
                if (c)
                    for (double& value : curve)
                        value += sign * cfg.m_size;
                break;
            }
            case 3: {
                bool c = uniform01(contam_rng) < cfg.q;
                int sign = uniform01(contam_rng) < 0.5 ? 1 : -1;
                double start = uniform01(contam_rng);
                out.contaminated[i] = c;
                out.signs[i] = int8_t(sign);
                if (c)
                    for (size_t k = 0; k < v; ++k)
                        if (grid.points[k] >= start)
                            curve[k] += sign * cfg.m_size;
                break;
            }
            case 4: {
                bool c = uniform01(contam_rng) < cfg.q;
                int sign = uniform01(contam_rng) < 0.5 ? 1 : -1;
                double start = uniform01(contam_rng) * (1.0 - cfg.peak_len);
                out.contaminated[i] = c;
                out.signs[i] = int8_t(sign);
                if (c)
                    for (size_t k = 0; k < v; ++k)
                        if (grid.points[k] >= start && grid.points[k] <= start + cfg.peak_len)
                            curve[k] += sign * cfg.m_size;
                break;
            }
            case 5: {
                bool c = uniform01(contam_rng) < cfg.q;
                int sign = uniform01(contam_rng) < 0.5 ? 1 : -1;
                auto points = draw_points(contam_rng, v, size_t(cfg.k_points));
                out.contaminated[i] = c;
                out.signs[i] = int8_t(sign);
                if (c)
                    for (size_t k : points)
                        curve[k] += sign * cfg.m_size;
                break;
            }
            case 6: {
                bool rough = uniform01(contam_rng) < cfg.q;
                out.contaminated[i] = rough;
                if (rough) {
                    auto rough_rng = curve_key.child(stream::rough_noise).rng();
                    curve = sample_gp(rough_factor, mean_fn, grid, rough_rng);
                }
                break;
            }
        }
        std::copy(curve.begin(), curve.end(), out.sample.values.begin() + i * v);
    }
    return out;
}

StudyReport run_study(const StudyConfig& cfg) {
    if (cfg.replications < 1)
        throw Error(Errc::bad_config, "need at least one replication");
    if (cfg.n < 2)
        throw Error(Errc::too_few_curves, "study needs n >= 2");

    std::vector<DepthMethod> methods =
        cfg.methods.empty() ? all_methods() : cfg.methods;

    StudyReport report;
    report.config = cfg;
    report.config.methods = methods;
    report.rows.push_back("Mean");
    for (const auto& method : methods)
        report.rows.push_back(method.label());

    Grid grid = canonical_grid(cfg.v);
    auto truth = [](double t) { return 4.0 * t; };
    StreamKey root{cfg.seed};
    size_t reps = size_t(cfg.replications);

    for (int model : cfg.models) {
        ErrorTable table;
        table.rows = report.rows;
        table.ei.assign(report.rows.size(), std::vector<double>(reps, 0.0));

        parallel_for(0, reps, [&](size_t rep) {
            StreamKey key = root.child(uint64_t(model)).child(rep);
            ContaminationConfig model_cfg;
            model_cfg.model_id = model;
            model_cfg.q = cfg.q;
            model_cfg.m_size = cfg.m_size;
            model_cfg.k_points = cfg.k_points;
            model_cfg.rough.k = cfg.rough_amplitude;
            LabeledSample labeled =
                generate_model(model_cfg, cfg.n, grid, key.child(stream::data));

            auto partition_rng = key.child(stream::partition).rng();
            Partition partition = random_partition(cfg.n, cfg.k_parts, partition_rng);
            auto depths = resampled_depth_all_multi(labeled.sample, partition, methods);

            table.ei[0][rep] = integrated_error(mean_curve(labeled.sample), truth, grid);
            for (size_t m = 0; m < methods.size(); ++m) {
                Curve trimmed = trimmed_mean(labeled.sample, depths[m], cfg.alpha);
                table.ei[m + 1][rep] = integrated_error(trimmed, truth, grid);
            }
        });

        report.tables.push_back(adjust_errors(std::move(table)));
    }
    return report;
}

}  // namespace fdepth
