#pragma once

#include <cstdint>

namespace fdepth::kernels {

// Inner loops of the pairwise depth computations, all counting grid points.
// The scalar table is the reference; the AVX2 table must produce bit-identical
// results (everything is integer counts and exact comparisons).
struct Kernels {
    const char* name;

    // ge_ab = #{k : b[k] - a[k] >= 0}, ge_ba = #{k : a[k] - b[k] >= 0}.
    void (*dominance_counts)(const double* a, const double* b, int n,
                             int* ge_ab, int* ge_ba);

    // Envelope membership of x against the band of {lo, hi}:
    //   bits[k]  = min(lo,hi)[k] <= x[k] <= max(lo,hi)[k]
    //   inside   = popcount(bits)
    //   corrected= #{k : hi[k] >= lo[k] and bits[k]}   (lo the oriented lower curve)
    // bits must hold (n+63)/64 words; tail bits are zeroed.
    void (*pair_inside_bits)(const double* lo, const double* hi, const double* x,
                             int n, uint64_t* bits, int* inside, int* corrected);

    // min(a,b) <= x <= max(a,b) at every point; early exit on first violation.
    bool (*band2_contains)(const double* a, const double* b, const double* x, int n);

    // Same for the three-curve envelope.
    bool (*band3_contains)(const double* a, const double* b, const double* c,
                           const double* x, int n);

    // #{k : min(a,b,c)[k] <= x[k] <= max(a,b,c)[k]}.
    int (*band3_inside_count)(const double* a, const double* b, const double* c,
                              const double* x, int n);
};

const Kernels& scalar_kernels();

// Null when the build or the CPU lacks AVX2.
const Kernels* avx2_kernels();

// Selected once at startup: AVX2 when available, else scalar. The environment
// variable FDEPTH_KERNELS=scalar|avx2 overrides the choice.
const Kernels& active_kernels();

// Longest run of set/clear bits among the first n; 0 when no such bit.
int longest_one_run(const uint64_t* bits, int n);
int longest_zero_run(const uint64_t* bits, int n);

}  // namespace fdepth::kernels
