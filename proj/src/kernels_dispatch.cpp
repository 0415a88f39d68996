#include <cstdlib>
#include <cstring>

#include "fdepth/kernels.hpp"

namespace fdepth::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernels& select() {
    const Kernels* avx2 = avx2_kernels();
    if (const char* forced = std::getenv("FDEPTH_KERNELS")) {
        if (std::strcmp(forced, "scalar") == 0)
            return scalar_kernels();
        if (std::strcmp(forced, "avx2") == 0 && avx2 && cpu_has_avx2())
            return *avx2;
    }
    if (avx2 && cpu_has_avx2())
        return *avx2;
    return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
    static const Kernels& selected = select();
    return selected;
}

}  // namespace fdepth::kernels
