// worker_pool.hpp
// Sharded parallel map with ordered emission. Workers claim contiguous
// shards of the input range through an atomic cursor; the calling
// thread emits completed shards strictly in ascending order, so output
// is byte-identical no matter how many workers run.

#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace gbl {

struct ShardRange {
    std::uint64_t begin = 0; // first value of the shard
    std::uint64_t count = 0; // number of values, stride `step`
    std::uint64_t step = 1;
};

// Runs `work` on shards of `shard_size` values drawn from the
// arithmetic progression {first, first+step, ...} of `total` values,
// and hands each shard's result to `emit` in ascending shard order.
// `emit` may return false to stop early (remaining work is dropped).
template <typename Result>
void sharded_ordered_run(std::uint64_t first, std::uint64_t total, std::uint64_t step,
                         std::uint64_t shard_size, unsigned workers,
                         const std::function<Result(const ShardRange&)>& work,
                         const std::function<bool(std::uint64_t shard_index, Result&&)>& emit) {
    if (total == 0) return;
    if (shard_size == 0) shard_size = 1;
    if (workers == 0) workers = 1;
    const std::uint64_t shard_count = (total + shard_size - 1) / shard_size;

    std::atomic<std::uint64_t> cursor{0};
    std::atomic<bool> cancelled{false};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, Result> done;

    auto worker_fn = [&] {
        for (;;) {
            const std::uint64_t idx = cursor.fetch_add(1);
            if (idx >= shard_count || cancelled.load()) return;
            ShardRange range;
            range.begin = first + idx * shard_size * step;
            range.count = std::min<std::uint64_t>(shard_size, total - idx * shard_size);
            range.step = step;
            Result r = work(range);
            std::lock_guard<std::mutex> lock(mu);
            done.emplace(idx, std::move(r));
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker_fn);

    // The calling thread doubles as a worker when it has nothing to
    // emit yet; with workers == 1 this degenerates to a serial loop.
    std::uint64_t next_emit = 0;
    for (; next_emit < shard_count;) {
        {
            std::unique_lock<std::mutex> lock(mu);
            auto it = done.find(next_emit);
            if (it != done.end()) {
                Result r = std::move(it->second);
                done.erase(it);
                lock.unlock();
                if (!emit(next_emit, std::move(r))) {
                    cancelled.store(true);
                    cursor.store(shard_count);
                    break;
                }
                ++next_emit;
                continue;
            }
        }
        const std::uint64_t idx = cursor.fetch_add(1);
        if (idx < shard_count && !cancelled.load()) {
            ShardRange range;
            range.begin = first + idx * shard_size * step;
            range.count = std::min<std::uint64_t>(shard_size, total - idx * shard_size);
            range.step = step;
            Result r = work(range);
            std::lock_guard<std::mutex> lock(mu);
            done.emplace(idx, std::move(r));
        } else {
            // all shards claimed: wait for the one we need
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return done.count(next_emit) > 0 || cancelled.load(); });
            if (cancelled.load()) break;
        }
    }
    cancelled.store(true);
    cv.notify_all();
    for (std::thread& t : pool) t.join();
}

} // namespace gbl
