#pragma once

#include <random>

#include "mukai/mukai.hpp"

namespace mukai::test {

// Deterministic generators for the property suites.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x6d756b6169ULL);  // fixed seed, reproducible runs
    return gen;
}

inline Int rand_int(long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    return Int(dist(rng()));
}

inline MukaiVector rand_vector(long long bound) {
    return {rand_int(-bound, bound), rand_int(-bound, bound), rand_int(-bound, bound)};
}

inline Surface rand_surface(long long half_bound = 20) {
    SurfaceKind kind = rand_int(0, 1) == 0 ? SurfaceKind::Abelian : SurfaceKind::K3;
    return Surface(kind, 2 * rand_int(1, half_bound));
}

// Valid setup with r0, |d0|, k <= bound; resamples until the gcd conditions hold.
inline FmSetup rand_setup(long long bound = 20) {
    for (;;) {
        Int r0 = rand_int(1, bound);
        Int d0 = rand_int(-bound, bound);
        Int k = rand_int(1, bound);
        if (gcd_int(r0, k) != 1 || gcd_int(r0, d0) != 1) continue;
        SurfaceKind kind = rand_int(0, 1) == 0 ? SurfaceKind::Abelian : SurfaceKind::K3;
        return make_setup(kind, r0, d0, k);
    }
}

}  // namespace mukai::test
