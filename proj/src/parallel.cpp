#include "fdepth/parallel.hpp"

#include <atomic>

namespace fdepth {

namespace {
std::atomic<unsigned> g_workers{0};  // 0 = use hardware concurrency
}

unsigned worker_count() {
    unsigned workers = g_workers.load(std::memory_order_relaxed);
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0)
            workers = 1;
    }
    return workers;
}

void set_worker_count(unsigned workers) {
    g_workers.store(workers, std::memory_order_relaxed);
}

}  // namespace fdepth
