#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "vlab/common.hpp"

namespace vlab {

// Worker cap: VLAB_THREADS if set (clamped to [1, hardware]), else all
// hardware threads.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("VLAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1 && v <= static_cast<long>(hw)) return static_cast<unsigned>(v);
            return v < 1 ? 1u : hw;
        } catch (const std::exception&) {
            return hw;
        }
    }
    return hw;
}

// Runs fn(i) for i in [begin, end) split into contiguous chunks.  fn must
// write only to per-index state; results are then independent of the worker
// count.
template <typename Fn>
void parallel_for(u64 begin, u64 end, Fn&& fn) {
    if (begin >= end) return;
    const u64 count = end - begin;
    const unsigned workers = static_cast<unsigned>(std::min<u64>(thread_budget(), count));
    if (workers <= 1) {
        for (u64 i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const u64 lo = begin + count * w / workers;
        const u64 hi = begin + count * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn]() {
            for (u64 i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace vlab
