#pragma once

#include <cstdint>
#include <random>

namespace trigsurf {

/// Derives an independent substream seed from (seed, stream). splitmix64
/// finalizer; used so that concurrent draws and per-trial work stay
/// reproducible regardless of scheduling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. The uniform and normal conversions are
/// implemented on top of raw mt19937_64 output rather than the standard
/// distributions, whose exact sequences are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace trigsurf
