#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fdepth/types.hpp"

namespace fdepth {

// Pointwise arithmetic mean over all curves.
Curve mean_curve(const FunctionalSample& sample);

struct TrimSpec {
    double alpha = 0.0;
    DepthMethod method;
    size_t trim_count = 0;  // [n * alpha]
};

TrimSpec make_trim_spec(size_t n, double alpha, DepthMethod method);

// Pointwise mean of the n - [n*alpha] deepest curves. The kept curves are
// summed in ascending index order, so alpha = 0 reproduces mean_curve exactly.
Curve trimmed_mean(const FunctionalSample& sample, const DepthVector& depths,
                   double alpha);

// (1/V) * sum_k [estimate(t_k) - truth(t_k)]^2.
double integrated_error(std::span<const double> estimate,
                        const std::function<double(double)>& truth, const Grid& grid);

// Integrated errors per estimator row ("Mean" first) and replication; EAI
// subtracts each replication's row minimum taken over all rows.
struct ErrorTable {
    std::vector<std::string> rows;
    std::vector<std::vector<double>> ei;   // [row][replication]
    std::vector<std::vector<double>> eai;  // filled by adjust_errors
    std::vector<double> mean;              // per row, of EAI
    std::vector<double> sd;                // sample sd; 0 when R < 2
};

ErrorTable adjust_errors(ErrorTable raw);

}  // namespace fdepth
