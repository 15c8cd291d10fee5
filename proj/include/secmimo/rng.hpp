#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace secmimo {

// splitmix64 finalizer; used to turn (seed, index) pairs into well-mixed keys.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Key for substream k of a master seed. Distinct (seed, k) pairs map to
// distinct, decorrelated keys, so partitioned runs are order-independent.
inline std::uint64_t substream_key(std::uint64_t seed, std::uint64_t k) {
    return mix64(mix64(seed) ^ mix64(k * 0xD1B54A32D192ED03ULL + 1));
}

// Deterministic RNG with explicit sampling formulas. Only the mt19937_64
// engine (whose output sequence is fixed by the standard) and elementary
// functions are used, so streams are reproducible bit-for-bit for a given
// seed on a given platform.
class Rng {
public:
    explicit Rng(std::uint64_t key) : eng_(key) {}

    static Rng substream(std::uint64_t seed, std::uint64_t k) {
        return Rng(substream_key(seed, k));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on (0, 1]: never returns 0, so log() below is always finite.
    double uniform_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Exponential with the given mean (one uniform consumed).
    double exponential(double mean) {
        return -mean * std::log(uniform_pos());
    }

    // Standard normal pair via Box-Muller (two uniforms consumed).
    void gaussian_pair(double& z0, double& z1) {
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        z0 = r * std::cos(t);
        z1 = r * std::sin(t);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace secmimo
