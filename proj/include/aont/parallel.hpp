#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace aont {

/// Scans indices [0, n) for the first one where `hit(i)` is true.
///
/// With workers > 1 the space is consumed in chunks through a shared cursor;
/// every worker keeps a running minimum and indices past the global best are
/// skipped, so the returned index equals the sequential answer regardless of
/// scheduling. `hit` must be safe to call concurrently.
inline std::optional<std::uint64_t> find_first_index(
    std::uint64_t n, unsigned workers, const std::function<bool(std::uint64_t)>& hit) {
    constexpr std::uint64_t kNone = ~0ull;
    if (workers <= 1 || n < 1024) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (hit(i)) return i;
        return std::nullopt;
    }
    constexpr std::uint64_t kChunk = 256;
    std::atomic<std::uint64_t> cursor{0};
    std::atomic<std::uint64_t> best{kNone};
    auto run = [&] {
        while (true) {
            const std::uint64_t base = cursor.fetch_add(kChunk);
            if (base >= n || base >= best.load(std::memory_order_relaxed)) return;
            const std::uint64_t end = std::min(base + kChunk, n);
            for (std::uint64_t i = base; i < end; ++i) {
                if (i >= best.load(std::memory_order_relaxed)) return;
                if (hit(i)) {
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    const std::uint64_t found = best.load();
    if (found == kNone) return std::nullopt;
    return found;
}

inline unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

} // namespace aont
