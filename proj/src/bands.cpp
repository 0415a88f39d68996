#include "fdepth/bands.hpp"

#include <algorithm>
#include <unordered_set>

namespace fdepth {

namespace {

void check_same_length(size_t have, size_t want, const char* what) {
    if (have != want)
        throw Error(Errc::mismatched_length, std::string(what) + " has " +
                                                 std::to_string(have) +
                                                 " values, expected " +
                                                 std::to_string(want));
}

}  // namespace

BandEnvelope envelope(const FunctionalSample& sample, std::span<const size_t> indices) {
    if (indices.size() < 2 || indices.size() > sample.n)
        throw Error(Errc::bad_indices,
                    "need between 2 and n delimiters, got " + std::to_string(indices.size()));
    std::unordered_set<size_t> seen;
    for (size_t idx : indices) {
        if (idx >= sample.n)
            throw Error(Errc::bad_indices, "curve index " + std::to_string(idx) +
                                               " out of range for n = " +
                                               std::to_string(sample.n));
        if (!seen.insert(idx).second)
            throw Error(Errc::bad_indices,
                        "duplicate delimiter index " + std::to_string(idx));
    }
    size_t v = sample.v();
    BandEnvelope band;
    band.delimiter_indices.assign(indices.begin(), indices.end());
    auto first = sample.curve(indices[0]);
    band.lower.assign(first.begin(), first.end());
    band.upper = band.lower;
    for (size_t r = 1; r < indices.size(); ++r) {
        auto curve = sample.curve(indices[r]);
        for (size_t k = 0; k < v; ++k) {
            band.lower[k] = std::min(band.lower[k], curve[k]);
            band.upper[k] = std::max(band.upper[k], curve[k]);
        }
    }
    return band;
}

bool contains_graph(std::span<const double> x, const BandEnvelope& band) {
    check_same_length(x.size(), band.lower.size(), "test curve");
    for (size_t k = 0; k < x.size(); ++k)
        if (x[k] < band.lower[k] || x[k] > band.upper[k])
            return false;
    return true;
}

BandMask inside_mask(std::span<const double> x, const BandEnvelope& band) {
    check_same_length(x.size(), band.lower.size(), "test curve");
    BandMask mask(x.size());
    for (size_t k = 0; k < x.size(); ++k)
        mask.set(k, x[k] >= band.lower[k] && x[k] <= band.upper[k]);
    return mask;
}

Dominance dominance(std::span<const double> x_a, std::span<const double> x_b) {
    check_same_length(x_b.size(), x_a.size(), "second curve");
    Dominance dom{BandMask(x_a.size()), 0.0};
    for (size_t k = 0; k < x_a.size(); ++k)
        dom.mask.set(k, x_b[k] - x_a[k] >= 0.0);
    dom.l_ab = measure(dom.mask);
    return dom;
}

CorrectedBand corrected_band(std::span<const double> x_a, std::span<const double> x_b) {
    Dominance ab = dominance(x_a, x_b);
    Dominance ba = dominance(x_b, x_a);
    CorrectedBand cb;
    cb.weight = std::max(ab.l_ab, ba.l_ab);
    if (ab.l_ab >= 0.5) {
        cb.domain = std::move(ab.mask);
        cb.lower.assign(x_a.begin(), x_a.end());
        cb.upper.assign(x_b.begin(), x_b.end());
        cb.upper_is_second = true;
    } else {
        cb.domain = std::move(ba.mask);
        cb.lower.assign(x_b.begin(), x_b.end());
        cb.upper.assign(x_a.begin(), x_a.end());
        cb.upper_is_second = false;
    }
    return cb;
}

bool corrected_contains(std::span<const double> x, const CorrectedBand& cb) {
    check_same_length(x.size(), cb.domain.size(), "test curve");
    for (size_t k = 0; k < x.size(); ++k)
        if (cb.domain.test(k) && (x[k] < cb.lower[k] || x[k] > cb.upper[k]))
            return false;
    return true;
}

BandMask corrected_inside_mask(std::span<const double> x, const CorrectedBand& cb) {
    check_same_length(x.size(), cb.domain.size(), "test curve");
    BandMask mask(x.size());
    for (size_t k = 0; k < x.size(); ++k)
        mask.set(k, cb.domain.test(k) && x[k] >= cb.lower[k] && x[k] <= cb.upper[k]);
    return mask;
}

double longest_true_run(const BandMask& mask) {
    size_t best = 0, run = 0;
    for (size_t k = 0; k < mask.size(); ++k) {
        run = mask.test(k) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return mask.size() == 0 ? 0.0 : double(best) / double(mask.size());
}

double longest_false_run(const BandMask& mask) {
    size_t best = 0, run = 0;
    for (size_t k = 0; k < mask.size(); ++k) {
        run = mask.test(k) ? 0 : run + 1;
        best = std::max(best, run);
    }
    return mask.size() == 0 ? 0.0 : double(best) / double(mask.size());
}

}  // namespace fdepth
