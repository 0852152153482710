/* Seeded random number generation.
 *
 * Xoshiro256++ streams seeded through SplitMix64, one independent stream per
 * replicate/chain, derived by hashing (campaign seed, cell identifiers,
 * replicate index).  Normal deviates use Box-Muller on 53-bit uniforms, so
 * every draw is a pure function of the stream state — results are identical
 * across platforms and thread counts.
 */
#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <type_traits>

namespace vecchia {

/* SplitMix64 step; also used as the stream-derivation hash. */
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/* Derive a child stream seed from a parent seed and identifying values.
 * Order-sensitive; doubles are hashed by bit pattern. */
inline std::uint64_t derive_seed(std::uint64_t seed) { return seed; }

template <class T, class... Rest>
std::uint64_t derive_seed(std::uint64_t seed, T part, Rest... rest) {
    std::uint64_t bits;
    if constexpr (std::is_floating_point_v<T>) {
        bits = std::bit_cast<std::uint64_t>(static_cast<double>(part));
    } else {
        bits = static_cast<std::uint64_t>(part);
    }
    std::uint64_t h = seed ^ (bits + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    (void)splitmix64(h);
    return derive_seed(h, rest...);
}

/* Xoshiro256++ (Blackman & Vigna), state seeded via SplitMix64. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /* Uniform on (0, 1]: 53-bit mantissa, never 0 so log() is safe. */
    double uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /* Standard normal via Box-Muller; pairs cached. */
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace vecchia
