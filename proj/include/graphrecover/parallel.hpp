#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace graphrecover {

/// Worker cap for parallel loops: the last set_thread_count() value, else
/// GRAPHRECOVER_THREADS, else std::thread::hardware_concurrency().
std::size_t thread_count();

/// 0 restores the default.
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [begin, end) over contiguous chunks, one chunk per
/// worker. Results must be written to per-index slots so the outcome does
/// not depend on the worker count. The first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t begin, std::size_t end, Body &&body)
{
    if (end <= begin)
        return;
    const std::size_t total = end - begin;
    const std::size_t workers = std::min(thread_count(), total);
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard guard(error_lock);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

} // namespace graphrecover
