#include "qphase/rng.hpp"

#include <cmath>
#include <numbers>

#include "qphase/errors.hpp"

namespace qphase {

std::uint64_t splitmix64(std::uint64_t x) {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RngStream RngStream::derive(std::uint64_t master_seed, std::uint64_t stream_index) {
    return RngStream(splitmix64(splitmix64(master_seed) + stream_index));
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double RngStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    // log1p(-u1) = log(1 - u1); u1 < 1 keeps the argument strictly positive.
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

std::uint64_t RngStream::below(std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidArgument("RngStream::below: bound must be positive");
    }
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

} // namespace qphase
