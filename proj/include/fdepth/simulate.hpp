#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "fdepth/estimators.hpp"
#include "fdepth/rng.hpp"
#include "fdepth/types.hpp"

namespace fdepth {

// Stationary covariance gamma(s,t) = k * exp(-c * |t - s|^mu).
struct GpSpec {
    double k = 1.0;
    double c = 1.0;
    double mu = 1.5;
};

// V*V row-major covariance matrix over the grid abscissae.
std::vector<double> gp_covariance(const Grid& grid, const GpSpec& spec);

struct GpFactor {
    std::vector<double> lower;  // V*V row-major, lower-triangular
    size_t v = 0;
    double jitter = 0.0;  // diagonal shift that made the factorization succeed
};

// Dense Cholesky with jitter escalating through {0, 1e-12, 1e-10, 1e-8}.
GpFactor gp_factor(std::span<const double> cov, size_t v);

// mean_fn(grid) + L * z with z iid standard normal.
Curve sample_gp(const GpFactor& factor, const std::function<double(double)>& mean_fn,
                const Grid& grid, std::mt19937_64& rng);

struct ContaminationConfig {
    int model_id = 0;     // 0..6
    double q = 0.1;       // contamination probability
    double m_size = 25.0; // contamination size constant M
    double peak_len = 2.0 / 30.0;  // model 4 interval length l
    int k_points = 4;              // model 5 contaminated point count
    double slope = 4.0;            // mean g(t) = slope * t
    GpSpec base{1.0, 1.0, 1.5};
    GpSpec smooth{1.0, 1.0, 2.0};   // model 6 main component
    GpSpec rough{16.0, 1.0, 0.2};   // model 6 contaminating component
};

struct LabeledSample {
    FunctionalSample sample;
    std::vector<uint8_t> contaminated;  // c_i (epsilon_i for model 6)
    std::vector<int8_t> signs;          // sigma_i; +1 where not applicable
};

// Model 0: base draws. 1: +c*M. 2: +c*sigma*M. 3: offset for t >= T_i.
// 4: offset on [T_i, T_i + l]. 5: offset at k distinct grid points.
// 6: per-curve mixture of smooth and rough draws.
// All per-curve randomness comes from substreams of `key`, so changing q or
// the model's knobs never perturbs the underlying base draws.
LabeledSample generate_model(const ContaminationConfig& cfg, size_t n, const Grid& grid,
                             StreamKey key);

struct StudyConfig {
    std::vector<int> models{0, 1, 2, 3, 4, 5, 6};
    std::vector<DepthMethod> methods;  // empty = all seven
    size_t n = 150;
    size_t v = 30;
    double q = 0.1;
    double m_size = 25.0;
    double alpha = 0.2;
    int replications = 200;
    int k_parts = 10;  // parts for the resampled depths; 1 = full-data depths
    int k_points = 4;
    double rough_amplitude = 16.0;  // model 6 contaminating variance
    uint64_t seed = 0;
};

struct StudyReport {
    StudyConfig config;
    std::vector<std::string> rows;  // "Mean" then the method labels
    // tables[m] holds the adjusted errors for models[m]
    std::vector<ErrorTable> tables;
};

// Per model and replication: generate, rank by resampled depth, trim,
// integrate errors against g, adjust across rows.
StudyReport run_study(const StudyConfig& cfg);

}  // namespace fdepth
