#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace fdepth {

// Worker count used by parallel_for; settable once from the CLI.
unsigned worker_count();
void set_worker_count(unsigned workers);

namespace detail {
inline thread_local bool in_parallel_region = false;
}

// Static contiguous slices, one thread per slice. Each index is processed by
// exactly one thread and writes only its own slots, so results are identical
// for any worker count. Nested calls run serially.
template <class F>
void parallel_for(size_t begin, size_t end, F&& fn) {
    size_t count = end > begin ? end - begin : 0;
    unsigned workers = worker_count();
    if (count == 0)
        return;
    if (workers <= 1 || count == 1 || detail::in_parallel_region) {
        for (size_t i = begin; i < end; ++i)
            fn(i);
        return;
    }
    if (workers > count)
        workers = static_cast<unsigned>(count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    size_t chunk = count / workers;
    size_t extra = count % workers;
    size_t start = begin;
    for (unsigned w = 0; w < workers; ++w) {
        size_t len = chunk + (w < extra ? 1 : 0);
        threads.emplace_back([start, len, &fn] {
            detail::in_parallel_region = true;
            for (size_t i = start; i < start + len; ++i)
                fn(i);
            detail::in_parallel_region = false;
        });
        start += len;
    }
    for (auto& t : threads)
        t.join();
}

}  // namespace fdepth
