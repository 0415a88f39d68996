#pragma once

#include <functional>
#include <random>
#include <vector>

#include "fdepth/types.hpp"

namespace helpers {

inline fdepth::FunctionalSample on_canonical_grid(
    const std::vector<std::vector<double>>& curves) {
    return fdepth::make_sample(fdepth::canonical_grid(curves.front().size()), curves);
}

inline std::vector<double> constant(size_t v, double value) {
    return std::vector<double>(v, value);
}

// Curve from a function of t over the canonical grid.
inline std::vector<double> from_fn(size_t v, const std::function<double(double)>& fn) {
    std::vector<double> curve(v);
    for (size_t k = 0; k < v; ++k)
        curve[k] = fn(double(k + 1) / double(v));
    return curve;
}

inline std::vector<std::vector<double>> random_curves(std::mt19937_64& rng, size_t n,
                                                      size_t v) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<double>> curves(n, std::vector<double>(v));
    for (auto& curve : curves)
        for (double& value : curve)
            value = normal(rng);
    return curves;
}

// Values on a coarse lattice so exact ties and crossings are common.
inline std::vector<std::vector<double>> lattice_curves(std::mt19937_64& rng, size_t n,
                                                       size_t v) {
    std::uniform_int_distribution<int> level(-2, 2);
    std::vector<std::vector<double>> curves(n, std::vector<double>(v));
    for (auto& curve : curves)
        for (double& value : curve)
            value = 0.5 * level(rng);
    return curves;
}

}  // namespace helpers
