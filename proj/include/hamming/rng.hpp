#pragma once

#include <cstdint>

namespace hamming {

// SplitMix64: golden-ratio increment plus murmur-style finalizer. Fully
// specified here so certificate runs reproduce bit-exactly on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Independent stream per (seed, index): the stream's initial state is
// SplitMix64(seed + index * 2^64/phi).next(). Consumers that draw a variable
// number of values stay schedule-independent because each index owns a stream.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed + index * 0x9E3779B97F4A7C15ull);
    return SplitMix64(mixer.next());
}

// Uniform draw in [0, bound) by modulo rejection; bound >= 1.
inline std::uint64_t uniform_below(SplitMix64& g, std::uint64_t bound) {
    const std::uint64_t rem = (~std::uint64_t{0} % bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t x = g.next();
        if (rem == 0 || x < ~std::uint64_t{0} - rem + 1)
            return x % bound;
    }
}

}  // namespace hamming
