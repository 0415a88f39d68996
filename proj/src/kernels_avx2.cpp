// AVX2 variants of the depth kernels. Compiled with -mavx2; selection against
// the CPU happens in active_kernels().

#include "fdepth/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace fdepth::kernels {

namespace {

void dominance_counts_avx2(const double* a, const double* b, int n,
                           int* ge_ab, int* ge_ba) {
    int ab = 0, ba = 0;
    int k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d va = _mm256_loadu_pd(a + k);
        __m256d vb = _mm256_loadu_pd(b + k);
        ab += std::popcount(unsigned(_mm256_movemask_pd(_mm256_cmp_pd(vb, va, _CMP_GE_OQ))));
        ba += std::popcount(unsigned(_mm256_movemask_pd(_mm256_cmp_pd(va, vb, _CMP_GE_OQ))));
    }
    for (; k < n; ++k) {
        ab += b[k] - a[k] >= 0.0;
        ba += a[k] - b[k] >= 0.0;
    }
    *ge_ab = ab;
    *ge_ba = ba;
}

void pair_inside_bits_avx2(const double* lo, const double* hi, const double* x,
                           int n, uint64_t* bits, int* inside, int* corrected) {
    int words = (n + 63) / 64;
    std::fill(bits, bits + words, uint64_t(0));
    int in_count = 0, corr_count = 0;
    int k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d vlo = _mm256_loadu_pd(lo + k);
        __m256d vhi = _mm256_loadu_pd(hi + k);
        __m256d vx = _mm256_loadu_pd(x + k);
        __m256d band_lo = _mm256_min_pd(vlo, vhi);
        __m256d band_hi = _mm256_max_pd(vlo, vhi);
        __m256d in = _mm256_and_pd(_mm256_cmp_pd(vx, band_lo, _CMP_GE_OQ),
                                   _mm256_cmp_pd(vx, band_hi, _CMP_LE_OQ));
        __m256d dom = _mm256_cmp_pd(vhi, vlo, _CMP_GE_OQ);
        unsigned in4 = unsigned(_mm256_movemask_pd(in));
        unsigned corr4 = in4 & unsigned(_mm256_movemask_pd(dom));
        bits[k / 64] |= uint64_t(in4) << (k % 64);
        in_count += std::popcount(in4);
        corr_count += std::popcount(corr4);
    }
    for (; k < n; ++k) {
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

bool band2_contains_avx2(const double* a, const double* b, const double* x, int n) {
    int k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d va = _mm256_loadu_pd(a + k);
        __m256d vb = _mm256_loadu_pd(b + k);
        __m256d vx = _mm256_loadu_pd(x + k);
        __m256d out = _mm256_or_pd(_mm256_cmp_pd(vx, _mm256_min_pd(va, vb), _CMP_LT_OQ),
                                   _mm256_cmp_pd(vx, _mm256_max_pd(va, vb), _CMP_GT_OQ));
        if (_mm256_movemask_pd(out))
            return false;
    }
    for (; k < n; ++k) {
        if (x[k] < std::min(a[k], b[k]) || x[k] > std::max(a[k], b[k]))
            return false;
    }
    return true;
}

bool band3_contains_avx2(const double* a, const double* b, const double* c,
                         const double* x, int n) {
    int k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d va = _mm256_loadu_pd(a + k);
        __m256d vb = _mm256_loadu_pd(b + k);
        __m256d vc = _mm256_loadu_pd(c + k);
        __m256d vx = _mm256_loadu_pd(x + k);
        __m256d lo = _mm256_min_pd(_mm256_min_pd(va, vb), vc);
        __m256d hi = _mm256_max_pd(_mm256_max_pd(va, vb), vc);
        __m256d out = _mm256_or_pd(_mm256_cmp_pd(vx, lo, _CMP_LT_OQ),
                                   _mm256_cmp_pd(vx, hi, _CMP_GT_OQ));
        if (_mm256_movemask_pd(out))
            return false;
    }
    for (; k < n; ++k) {
        double lo = std::min(std::min(a[k], b[k]), c[k]);
        double hi = std::max(std::max(a[k], b[k]), c[k]);
        if (x[k] < lo || x[k] > hi)
            return false;
    }
    return true;
}

int band3_inside_count_avx2(const double* a, const double* b, const double* c,
                            const double* x, int n) {
    int count = 0;
    int k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d va = _mm256_loadu_pd(a + k);
        __m256d vb = _mm256_loadu_pd(b + k);
        __m256d vc = _mm256_loadu_pd(c + k);
        __m256d vx = _mm256_loadu_pd(x + k);
        __m256d lo = _mm256_min_pd(_mm256_min_pd(va, vb), vc);
        __m256d hi = _mm256_max_pd(_mm256_max_pd(va, vb), vc);
        __m256d in = _mm256_and_pd(_mm256_cmp_pd(vx, lo, _CMP_GE_OQ),
                                   _mm256_cmp_pd(vx, hi, _CMP_LE_OQ));
        count += std::popcount(unsigned(_mm256_movemask_pd(in)));
    }
    for (; k < n; ++k) {
        double lo = std::min(std::min(a[k], b[k]), c[k]);
        double hi = std::max(std::max(a[k], b[k]), c[k]);
        count += x[k] >= lo && x[k] <= hi;
    }
    return count;
}

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels table{
        "avx2",
        dominance_counts_avx2,
        pair_inside_bits_avx2,
        band2_contains_avx2,
        band3_contains_avx2,
        band3_inside_count_avx2,
    };
    return &table;
}

}  // namespace fdepth::kernels

#else

namespace fdepth::kernels {

const Kernels* avx2_kernels() { return nullptr; }

}  // namespace fdepth::kernels

#endif
