#pragma once

#include <cstdint>
#include <random>

namespace qphase {

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random stream with a pinned generator family, so that any
// experiment output is a pure function of (config, seed). The family is
// recorded in experiment outputs as RngStream::kFamily and consists of:
//
//   engine    std::mt19937_64 (bit-exact per the C++ standard)
//   split     derive(master, k) seeds the engine with
//             splitmix64(splitmix64(master) + k)   (counter-based split)
//   uniform   (next_u64() >> 11) * 2^-53, giving [0, 1)
//   gaussian  Box-Muller on two uniforms; both values of the pair are
//             consumed (the second is cached for the next call)
//
// Standard-library distributions are avoided on purpose: their draw
// sequences are implementation-defined.
class RngStream {
public:
    static constexpr const char* kFamily = "mt19937_64+splitmix64/box-muller:v1";

    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Counter-based split of a master seed into independent per-trial streams.
    static RngStream derive(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);

    // Standard normal draw (Box-Muller).
    double gaussian();
    double gaussian(double sigma) { return sigma * gaussian(); }

    // Unbiased uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace qphase
