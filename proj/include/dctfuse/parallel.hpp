#pragma once

#include <thread>
#include <vector>

namespace dctfuse {

// Worker cap: FUSE_THREADS when set (clamped to >= 1), otherwise the
// hardware concurrency. Parallelism here never changes results; work is
// split into static contiguous ranges writing disjoint outputs.
int worker_count();

template <class Fn>
void parallel_for(int count, Fn&& body) {
    if (count <= 0) return;
    const int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int begin = static_cast<int>(static_cast<long long>(count) * w / workers);
        const int end = static_cast<int>(static_cast<long long>(count) * (w + 1) / workers);
        pool.emplace_back([begin, end, &body] {
            for (int i = begin; i < end; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dctfuse
