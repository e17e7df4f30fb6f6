#ifndef CPERS_PARALLEL_HPP
#define CPERS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cpers {

/// Worker count from CPERS_THREADS, else the hardware concurrency.
inline unsigned default_parallelism() {
    if (const char *env = std::getenv("CPERS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Smallest index i in [0, count) with pred(i), or nullopt. Indices are
/// claimed in blocks by up to `threads` workers; the answer does not depend
/// on the thread count. pred must be safe to call concurrently.
template <class Pred>
std::optional<std::uint64_t> first_match(std::uint64_t count, unsigned threads, Pred pred) {
    constexpr std::uint64_t none = ~std::uint64_t{0};
    if (threads <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (pred(i))
                return i;
        return std::nullopt;
    }
    const std::uint64_t block = std::max<std::uint64_t>(1, count / (std::uint64_t{threads} * 16));
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{none};
    auto work = [&] {
        while (true) {
            const std::uint64_t start = next.fetch_add(block);
            if (start >= count || start >= best.load())
                return;
            const std::uint64_t end = std::min(count, start + block);
            for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
                if (pred(i)) {
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back(work);
    for (auto &t : pool)
        t.join();
    const std::uint64_t b = best.load();
    if (b == none)
        return std::nullopt;
    return b;
}

} // namespace cpers

#endif
