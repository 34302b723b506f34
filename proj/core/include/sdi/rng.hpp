#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

namespace sdi {

// Deterministic PRNG stream (xoshiro256**, seeded through splitmix64).
//
// std::uniform_real_distribution is implementation-defined, so every draw
// here is produced from raw 64-bit output; identical seeds give identical
// sequences bit-for-bit on any platform. Substreams are derived by mixing
// a stream counter into the seed, which lets batch workers own independent
// streams split from one batch seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : RngStream(seed, 0) {}

    RngStream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        for (auto& word : state_) {
            word = splitmix64(x);
        }
        // xoshiro must not start from the all-zero state
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
            state_[0] = 0x8BADF00DULL;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_u01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + next_u01() * (hi - lo);
    }

    // Uniform index in [0, n); unbiased via rejection.
    std::size_t next_below(std::size_t n) {
        if (n <= 1) return 0;
        const std::uint64_t bound = n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t u;
        do {
            u = next_u64();
        } while (u >= limit);
        return static_cast<std::size_t>(u % bound);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace sdi
