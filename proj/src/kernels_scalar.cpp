#include <algorithm>

#include "fdepth/kernels.hpp"

namespace fdepth::kernels {

namespace {

void dominance_counts_scalar(const double* a, const double* b, int n,
                             int* ge_ab, int* ge_ba) {
    int ab = 0, ba = 0;
    for (int k = 0; k < n; ++k) {
        ab += b[k] - a[k] >= 0.0;
        ba += a[k] - b[k] >= 0.0;
    }
    *ge_ab = ab;
    *ge_ba = ba;
}

void pair_inside_bits_scalar(const double* lo, const double* hi, const double* x,
                             int n, uint64_t* bits, int* inside, int* corrected) {
    int words = (n + 63) / 64;
    std::fill(bits, bits + words, uint64_t(0));
    int in_count = 0, corr_count = 0;
    for (int k = 0; k < n; ++k) {
        double band_lo = std::min(lo[k], hi[k]);
        double band_hi = std::max(lo[k], hi[k]);
        bool in = x[k] >= band_lo && x[k] <= band_hi;
        bits[k / 64] |= uint64_t(in) << (k % 64);
        in_count += in;
        corr_count += in && hi[k] >= lo[k];
    }
    *inside = in_count;
    *corrected = corr_count;
}

bool band2_contains_scalar(const double* a, const double* b, const double* x, int n) {
    for (int k = 0; k < n; ++k) {
        if (x[k] < std::min(a[k], b[k]) || x[k] > std::max(a[k], b[k]))
            return false;
    }
    return true;
}

bool band3_contains_scalar(const double* a, const double* b, const double* c,
                           const double* x, int n) {
    for (int k = 0; k < n; ++k) {
        double lo = std::min(std::min(a[k], b[k]), c[k]);
        double hi = std::max(std::max(a[k], b[k]), c[k]);
        if (x[k] < lo || x[k] > hi)
            return false;
    }
    return true;
}

int band3_inside_count_scalar(const double* a, const double* b, const double* c,
                              const double* x, int n) {
    int count = 0;
    for (int k = 0; k < n; ++k) {
        double lo = std::min(std::min(a[k], b[k]), c[k]);
        double hi = std::max(std::max(a[k], b[k]), c[k]);
        count += x[k] >= lo && x[k] <= hi;
    }
    return count;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels table{
        "scalar",
        dominance_counts_scalar,
        pair_inside_bits_scalar,
        band2_contains_scalar,
        band3_contains_scalar,
        band3_inside_count_scalar,
    };
    return table;
}

int longest_one_run(const uint64_t* bits, int n) {
    int best = 0, run = 0;
    for (int k = 0; k < n; ++k) {
        if ((bits[k / 64] >> (k % 64)) & 1) {
            run += 1;
            best = std::max(best, run);
        } else {
            run = 0;
        }
    }
    return best;
}

int longest_zero_run(const uint64_t* bits, int n) {
    int best = 0, run = 0;
    for (int k = 0; k < n; ++k) {
        if ((bits[k / 64] >> (k % 64)) & 1) {
            run = 0;
        } else {
            run += 1;
            best = std::max(best, run);
        }
    }
    return best;
}

}  // namespace fdepth::kernels
