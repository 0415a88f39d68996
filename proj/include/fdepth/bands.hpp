#pragma once

#include <span>

#include "fdepth/types.hpp"

namespace fdepth {

// Pointwise min/max of the delimiting curves.
struct BandEnvelope {
    Curve lower;
    Curve upper;
    std::vector<size_t> delimiter_indices;
};

// Band restricted to the larger dominance set, with a fixed lower and upper
// delimiter and the weight max(L_ab, L_ba).
struct CorrectedBand {
    BandMask domain;
    Curve lower;
    Curve upper;
    double weight = 0.0;
    bool upper_is_second = true;  // orientation: second input curve on top
};

BandEnvelope envelope(const FunctionalSample& sample, std::span<const size_t> indices);

// true iff lower <= x <= upper at every grid point (boundaries inclusive).
bool contains_graph(std::span<const double> x, const BandEnvelope& band);

// bit k set iff lower_k <= x_k <= upper_k.
BandMask inside_mask(std::span<const double> x, const BandEnvelope& band);

// mask a(a,b) = {k : x_b(t_k) - x_a(t_k) >= 0}; ties count in both directions.
struct Dominance {
    BandMask mask;
    double l_ab = 0.0;
};
Dominance dominance(std::span<const double> x_a, std::span<const double> x_b);

// Branch rule: L_ab >= 1/2 keeps a below b on a(a,b); otherwise (L_ba > 1/2)
// the roles swap. The exact tie L_ab = L_ba = 1/2 takes the first branch.
CorrectedBand corrected_band(std::span<const double> x_a, std::span<const double> x_b);

// true iff x is inside on every domain point; empty domain is vacuously true.
bool corrected_contains(std::span<const double> x, const CorrectedBand& cb);

// bit k set iff k is in the domain and cb.lower_k <= x_k <= cb.upper_k.
BandMask corrected_inside_mask(std::span<const double> x, const CorrectedBand& cb);

// Longest maximal run of true/false bits as a proportion of V.
double longest_true_run(const BandMask& mask);
double longest_false_run(const BandMask& mask);

}  // namespace fdepth
