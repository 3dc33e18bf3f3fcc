#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace sepdim {

/*
 * Deterministic generator used everywhere randomness appears. Distributions
 * are hand-rolled on top of splitmix64 so identical seeds give identical
 * streams on every platform and standard library; reproducibility of
 * certificates depends on it.
 */
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi]; modular reduction, bias irrelevant here.
    long uniform_int(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (no cached spare, keeps state simple).
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }
};

/// Order-sensitive seed mixing for derived streams (per trial, per cell, ...).
inline uint64_t mix_seed(std::initializer_list<uint64_t> parts) {
    uint64_t h = 0x6a09e667f3bcc909ULL;
    for (uint64_t p : parts) {
        h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        Rng r(h);
        h = r.next();
    }
    return h;
}

} // namespace sepdim
