#pragma once

// Deterministic partitioned execution. A half-open index range is cut into
// fixed chunks; workers claim chunks in any order, but chunk outputs are
// concatenated in index order, so the result never depends on the worker
// count. The first failing chunk (by index) decides which exception escapes.

#include "trirem/arith.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace trirem {

unsigned default_thread_count() noexcept;

template <class T, class ChunkFn>
std::vector<T> partitioned_collect(u64 first, u64 last, unsigned threads, ChunkFn&& chunk_fn)
{
    std::vector<T> merged;
    if (first >= last)
        return merged;

    threads = std::max(threads, 1u);
    const u64 span = last - first;
    const u64 chunk_count = std::min<u64>(span, u64{threads} * 16);
    const u64 chunk_size = (span + chunk_count - 1) / chunk_count;
    const u64 chunks = (span + chunk_size - 1) / chunk_size;

    std::vector<std::vector<T>> outputs(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::atomic<u64> next{0};

    auto worker = [&] {
        for (u64 i = next.fetch_add(1); i < chunks; i = next.fetch_add(1)) {
            const u64 lo = first + i * chunk_size;
            const u64 hi = std::min(last, lo + chunk_size);
            try {
                chunk_fn(lo, hi, outputs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned spawned = static_cast<unsigned>(std::min<u64>(threads, chunks)) - 1;
    std::vector<std::jthread> pool;
    pool.reserve(spawned);
    for (unsigned t = 0; t < spawned; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    for (auto& part : outputs)
        merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    return merged;
}

} // namespace trirem
