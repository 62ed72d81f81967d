#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gffdisc/rng.hpp"

namespace gffdisc {

/// (mean, standard error, sample count, seed) of a Monte Carlo quantity.
struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long n = 0;
    std::uint64_t seed = 0;
    double wall_s = 0.0;
};

inline McEstimate summarize(const std::vector<double>& xs, std::uint64_t seed,
                            double wall_s = 0.0) {
    if (xs.empty()) throw std::invalid_argument("summarize: n must be >= 1");
    McEstimate e;
    e.n = static_cast<long>(xs.size());
    e.seed = seed;
    e.wall_s = wall_s;
    double s = 0.0;
    for (double x : xs) s += x;
    e.mean = s / static_cast<double>(e.n);
    double ss = 0.0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    double var = (e.n > 1) ? ss / static_cast<double>(e.n - 1) : 0.0;
    e.stderr_ = std::sqrt(var / static_cast<double>(e.n));
    return e;
}

inline unsigned default_workers() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

// Runs fn(i) for i in [0, n). Work is pulled from a shared counter; any state the
// tasks produce must be written to per-index slots so results are independent of
// scheduling. Exceptions are rethrown on the calling thread.
inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                         unsigned workers = 0) {
    if (n <= 0) return;
    if (workers == 0) workers = default_workers();
    if (workers <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next(0);
    std::atomic<bool> failed(false);
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&]() {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned k = static_cast<unsigned>(std::min<std::int64_t>(workers, n));
    pool.reserve(k);
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// Embarrassingly parallel MC driver: sample i draws from its own stream
// derive_stream(seed, i), so the estimate is bit-identical for any worker count.
inline McEstimate mc_run(long n, std::uint64_t seed,
                         const std::function<double(std::int64_t, RngStream&)>& sample,
                         unsigned workers = 0) {
    if (n <= 0) throw std::invalid_argument("mc_run: n must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> vals(static_cast<std::size_t>(n));
    parallel_for(n, [&](std::int64_t i) {
        RngStream rng = derive_stream(seed, static_cast<std::uint64_t>(i));
        vals[static_cast<std::size_t>(i)] = sample(i, rng);
    }, workers);
    auto t1 = std::chrono::steady_clock::now();
    return summarize(vals, seed, std::chrono::duration<double>(t1 - t0).count());
}

}  // namespace gffdisc
