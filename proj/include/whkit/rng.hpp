#pragma once

#include <cstdint>

#include "whkit/linalg.hpp"

namespace whkit {

/// SplitMix64; used for the seeded ideal families and perturbation
/// elements. Fixed algorithm so reports are reproducible across
/// platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Element with small integer coefficients, not identically zero.
    Vector element(std::size_t n) {
        for (;;) {
            Vector v(n);
            for (std::size_t k = 0; k < n; ++k) v[k] = Scalar(range(-3, 3));
            if (!is_zero(v)) return v;
        }
    }

private:
    std::uint64_t state_;
};

/// Default seed used everywhere unless overridden (flag or WHKIT_SEED).
inline constexpr std::uint64_t kDefaultSeed = 7;

}  // namespace whkit
