#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qsr {

// Default seed for every randomized check in the library; overridable via
// function arguments and the CLI --seed flag.
inline constexpr std::uint64_t kDefaultSeed = 42;

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// engines so sampled checks reproduce bit-exactly across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

// Worker count: QSR_THREADS overrides, hardware concurrency is the default.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("QSR_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Partitions [0, total) into contiguous chunks and runs fn(begin, end, chunk)
// on worker threads. Chunk indices are stable, so per-chunk results can be
// merged in chunk order for schedule-independent output.
template <typename Fn>
void parallel_chunks(std::size_t total, std::size_t chunk_count, Fn&& fn) {
    if (total == 0) return;
    if (chunk_count == 0) chunk_count = 1;
    if (chunk_count > total) chunk_count = total;
    if (chunk_count == 1) {
        fn(std::size_t{0}, total, std::size_t{0});
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunk_count);
    const std::size_t per = total / chunk_count;
    const std::size_t extra = total % chunk_count;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunk_count; ++c) {
        const std::size_t len = per + (c < extra ? 1 : 0);
        const std::size_t end = begin + len;
        threads.emplace_back([&fn, begin, end, c] { fn(begin, end, c); });
        begin = end;
    }
    for (auto& t : threads) t.join();
}

} // namespace qsr
