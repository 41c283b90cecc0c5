#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace charn {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based seed derivation: independent streams for (master, stream,
// counter) triples, so replicates can run in any order on any thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t counter = 0) {
    std::uint64_t s = master;
    (void)splitmix64(s);
    s ^= 0x9E3779B97F4A7C15ULL * (stream + 1);
    (void)splitmix64(s);
    s ^= 0xC2B2AE3D27D4EB4FULL * (counter + 1);
    std::uint64_t out = splitmix64(s);
    return out ^ splitmix64(s);
}

// Uniform draw strictly inside (0,1): quantile transforms stay finite.
inline double uniform_open(Rng& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

// One standard normal draw (Box-Muller, cosine branch only so every draw
// consumes exactly two uniforms regardless of call history).
inline double normal_draw(Rng& rng) {
    const double u1 = uniform_open(rng);
    const double u2 = uniform_open(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Marsaglia-Tsang gamma(shape, 1) for shape >= 1 (all uses have shape > 1).
inline double gamma_draw(Rng& rng, double shape) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal_draw(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = uniform_open(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

inline double chi_square_draw(Rng& rng, double dof) {
    return 2.0 * gamma_draw(rng, 0.5 * dof);
}

}  // namespace charn
