#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "trigl1/trig_core.hpp"

// Seeded generators for test functions. Uniform deviates are derived from
// raw mt19937_64 bits so runs are reproducible across platforms and standard
// libraries.

namespace trigl1 {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// Random trigonometric polynomial of degree < deg_bound with coefficients
/// uniform in [-1, 1].
inline TrigPoly random_trigpoly(Rng& rng, int deg_bound) {
    TrigPoly p(deg_bound);
    for (auto& c : p.a) c = rng.uniform(-1.0, 1.0);
    for (auto& c : p.b) c = rng.uniform(-1.0, 1.0);
    return p;
}

/// Random finite trig sum with `count` frequencies drawn uniformly from
/// [freq_lo, freq_hi] and coefficients uniform in [-1, 1]. With freq_lo >= n
/// this lands in the orthogonal complement of the degree-n polynomial space.
inline TrigPoly random_highpass_trig(Rng& rng, int freq_lo, int freq_hi, int count = 6) {
    TrigPoly p(freq_hi + 1);
    for (int t = 0; t < count; ++t) {
        int k = rng.uniform_int(freq_lo, freq_hi);
        p.a[static_cast<size_t>(k)] += rng.uniform(-1.0, 1.0);
        p.b[static_cast<size_t>(k - 1)] += rng.uniform(-1.0, 1.0);
    }
    return p;
}

}  // namespace trigl1
