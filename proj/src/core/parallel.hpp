#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace mostar {

// jobs <= 0 means one worker per hardware thread.
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(worker, begin, end) over contiguous chunks of [0, count).
// Workers write only worker-indexed state, so callers can merge results in
// worker order and get output independent of the job count.
inline void parallel_chunks(int jobs, long long count,
                            const std::function<void(int, long long, long long)>& fn) {
    jobs = resolve_jobs(jobs);
    if (count <= 0) return;
    long long workers = std::min<long long>(jobs, count);
    if (workers <= 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (long long w = 0; w < workers; ++w) {
        long long begin = count * w / workers;
        long long end = count * (w + 1) / workers;
        pool.emplace_back(fn, static_cast<int>(w), begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace mostar
