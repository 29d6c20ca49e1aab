#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bimsa {

// Deterministic random stream. The engine (mt19937_64) is fully specified by
// the standard; the distribution helpers below are hand-rolled because the
// std:: distributions are implementation-defined and would break the
// byte-identical reproducibility contract across library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of entropy.
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(engine_() % span);
    }

    // Box-Muller; one value per draw keeps the stream position predictable.
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + stddev * z;
    }

    // Independent substream for (seed, stream) pairs, e.g. per-sample
    // augmentation streams that do not depend on worker scheduling.
    static Rng substream(uint64_t seed, uint64_t stream) {
        uint64_t x = seed * 0x9e3779b97f4a7c15ull + stream + 1;
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27; x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return Rng(x);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace bimsa
