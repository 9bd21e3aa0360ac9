#include "qphase/noise.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace qphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double draw_phase(double sigma, bool uniform, RngStream& rng) {
    if (uniform) {
        return rng.uniform(0.0, kTwoPi);
    }
    return rng.gaussian(sigma);
}

Amp unit_phase(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

} // namespace

RegisterState noisy_initialize(int n_qubits, const InitPhaseNoise& model, RngStream& rng) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw InvalidArgument("n_qubits must be in 1..20, got " + std::to_string(n_qubits));
    }
    if (!std::isfinite(model.sigma) || model.sigma < 0.0) {
        throw InvalidArgument("init phase sigma must be finite and nonnegative");
    }
    const std::uint64_t n = std::uint64_t{1} << n_qubits;
    const double mag = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amp> amps(n);

    if (model.mode == PhaseMode::PerQubit) {
        // theta[i][b]: phase attached to bit value b of qubit i.
        std::vector<std::array<double, 2>> theta(n_qubits);
        for (int i = 0; i < n_qubits; ++i) {
            theta[i][0] = draw_phase(model.sigma, model.uniform, rng);
            theta[i][1] = draw_phase(model.sigma, model.uniform, rng);
        }
        for (std::uint64_t k = 0; k < n; ++k) {
            double total = 0.0;
            for (int i = 0; i < n_qubits; ++i) {
                const int bit = static_cast<int>((k >> (n_qubits - 1 - i)) & 1);
                total += theta[i][bit];
            }
            amps[k] = mag * unit_phase(total);
        }
    } else {
        for (std::uint64_t k = 0; k < n; ++k) {
            amps[k] = mag * unit_phase(draw_phase(model.sigma, model.uniform, rng));
        }
    }
    return RegisterState(n_qubits, std::move(amps));
}

GateMatrix GeneralUnitaryError::to_gate(int wire) const {
    const double mag_sq = std::norm(e1) + std::norm(e2);
    if (mag_sq <= 0.0) {
        throw InvalidArgument("general unitary error requires e1, e2 not both zero");
    }
    const double inv = 1.0 / std::sqrt(mag_sq);
    return GateMatrix::single({inv * std::conj(e1), inv * std::conj(e2),
                               inv * e2, inv * -e1},
                              wire);
}

GateMatrix random_unitary_error(double sigma_rotation, RngStream& rng, int wire) {
    if (!(sigma_rotation >= 0.0)) {
        throw InvalidArgument("sigma_rotation must be nonnegative");
    }
    const double r = rng.gaussian(sigma_rotation);
    const double a = rng.gaussian(sigma_rotation);
    const double b = rng.gaussian(sigma_rotation);
    const double c = std::cos(r);
    const double s = std::sin(r);
    return GateMatrix::single({c * unit_phase(a), -s * unit_phase(b),
                               s * unit_phase(-b), c * unit_phase(-a)},
                              wire);
}

GateMatrix haar_random_unitary(RngStream& rng, int wire) {
    const double u = rng.uniform();
    const double a = rng.uniform(0.0, kTwoPi);
    const double b = rng.uniform(0.0, kTwoPi);
    const double g = rng.uniform(0.0, kTwoPi);
    const double s = std::sqrt(u);       // sin(r)
    const double c = std::sqrt(1.0 - u); // cos(r)
    const Amp phase = unit_phase(g);
    return GateMatrix::single({phase * (c * unit_phase(a)), phase * (-s * unit_phase(b)),
                               phase * (s * unit_phase(-b)), phase * (c * unit_phase(-a))},
                              wire);
}

GateMatrix gate_phase_wrap(const GateMatrix& gate, double sigma, RngStream& rng) {
    gate.validate();
    return gates::with_global_phase(gate, rng.gaussian(sigma));
}

double phase_walk_sample(const PhaseWalkModel& model, RngStream& rng) {
    if (model.steps_m == 0) {
        return 0.0;
    }
    return rng.gaussian(model.step_size_s * std::sqrt(static_cast<double>(model.steps_m)));
}

double decoherence_characteristic(const DecoherenceModel& model, double t, int n_qubits) {
    if (!(t >= 0.0)) {
        throw InvalidArgument("decoherence time t must be nonnegative");
    }
    if (n_qubits < 1) {
        throw InvalidArgument("n_qubits must be at least 1");
    }
    if (!(model.t_d > 0.0)) {
        throw InvalidArgument("t_d must be positive");
    }
    const double single = std::exp(-t / model.t_d);
    double value = 1.0;
    for (int i = 0; i < n_qubits; ++i) {
        value *= single;
    }
    return value;
}

double decay_probability(const DecoherenceModel& model, double t, bool& clamped) {
    if (!(t >= 0.0)) {
        throw InvalidArgument("decay time t must be nonnegative");
    }
    if (!(model.lambda > 0.0)) {
        throw InvalidArgument("lambda must be positive");
    }
    const double raw = 1.0 - model.lambda * std::exp(-model.lambda * t);
    clamped = raw < 0.0 || raw > 1.0;
    return std::min(1.0, std::max(0.0, raw));
}

double decay_probability(const DecoherenceModel& model, double t) {
    bool clamped = false;
    const double p = decay_probability(model, t, clamped);
    if (clamped) {
        std::cerr << "qphase: decay probability clamped to [0,1] at lambda="
                  << model.lambda << " t=" << t << "\n";
    }
    return p;
}

double alpha_fraction(const DecoherenceModel& model, double t) {
    if (!(t >= 0.0)) {
        throw InvalidArgument("decay time t must be nonnegative");
    }
    return std::exp(-model.lambda * t);
}

StatsFamily stats_family_from_string(std::string_view name) {
    if (name == "bose_einstein") {
        return StatsFamily::BoseEinstein;
    }
    if (name == "fermi_dirac") {
        return StatsFamily::FermiDirac;
    }
    if (name == "maxwell_boltzmann") {
        return StatsFamily::MaxwellBoltzmann;
    }
    throw InvalidArgument("unknown statistics family: " + std::string(name));
}

std::string_view stats_family_name(StatsFamily family) {
    switch (family) {
    case StatsFamily::BoseEinstein:
        return "bose_einstein";
    case StatsFamily::FermiDirac:
        return "fermi_dirac";
    case StatsFamily::MaxwellBoltzmann:
        return "maxwell_boltzmann";
    }
    throw InvalidArgument("invalid statistics family");
}

void ErrorStatisticsModel::validate() const {
    if (n_cells < 1) {
        throw InvalidArgument("stats.N must be at least 1");
    }
    if (n_particles < 0) {
        throw InvalidArgument("stats.n must be nonnegative");
    }
    if (family == StatsFamily::FermiDirac && n_particles > n_cells) {
        throw InvalidArgument("fermi_dirac requires n <= N");
    }
    if (n_particles > 20) {
        throw InvalidArgument("stats.n above 20 is not supported (exact arithmetic)");
    }
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t numer = static_cast<std::uint64_t>(n - k + i);
        // result * numer / i is integral at every step; guard the multiply.
        if (result > UINT64_MAX / numer) {
            throw InvalidArgument("binomial coefficient overflows 64 bits");
        }
        result = result * numer / static_cast<std::uint64_t>(i);
    }
    return result;
}

namespace {

void check_pattern(const ErrorStatisticsModel& model, const Occupancy& pattern) {
    if (pattern.size() != static_cast<std::size_t>(model.n_cells)) {
        throw InvalidArgument("pattern length must equal the number of cells");
    }
    long long total = 0;
    for (int count : pattern) {
        if (count < 0) {
            throw InvalidArgument("pattern occupancies must be nonnegative");
        }
        if (model.family == StatsFamily::FermiDirac && count > 1) {
            throw InvalidArgument("invalid pattern: fermi_dirac cell occupied more than once");
        }
        total += count;
    }
    if (total != model.n_particles) {
        throw InvalidArgument("pattern occupancies must sum to the particle count");
    }
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

void enumerate_occupancies(int cells_left, int particles_left, bool zero_one,
                           Occupancy& prefix, std::vector<Occupancy>& out) {
    if (cells_left == 1) {
        if (!zero_one || particles_left <= 1) {
            prefix.push_back(particles_left);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    const int cap = zero_one ? std::min(1, particles_left) : particles_left;
    for (int c = 0; c <= cap; ++c) {
        prefix.push_back(c);
        enumerate_occupancies(cells_left - 1, particles_left - c, zero_one, prefix, out);
        prefix.pop_back();
    }
}

// Lexicographic unranking of a k-subset of {0..m-1}.
std::vector<int> unrank_combination(std::uint64_t rank, int m, int k) {
    std::vector<int> positions;
    positions.reserve(k);
    int next = 0;
    for (int remaining = k; remaining > 0; --remaining) {
        for (int c = next; c <= m - remaining; ++c) {
            const std::uint64_t block = binomial(m - c - 1, remaining - 1);
            if (rank < block) {
                positions.push_back(c);
                next = c + 1;
                break;
            }
            rank -= block;
        }
    }
    return positions;
}

} // namespace

Rational pattern_probability(const ErrorStatisticsModel& model, const Occupancy& pattern) {
    model.validate();
    check_pattern(model, pattern);
    const int n_cells = model.n_cells;
    const int n = model.n_particles;
    switch (model.family) {
    case StatsFamily::BoseEinstein:
        return Rational(1, static_cast<long long>(binomial(n_cells + n - 1, n)));
    case StatsFamily::FermiDirac:
        return Rational(1, static_cast<long long>(binomial(n_cells, n)));
    case StatsFamily::MaxwellBoltzmann: {
        // n! / (prod k_i!) placements out of N^n equally likely ones.
        long long numer = factorial(n);
        for (int count : pattern) {
            numer /= factorial(count);
        }
        long long denom = 1;
        for (int i = 0; i < n; ++i) {
            if (denom > std::numeric_limits<long long>::max() / n_cells) {
                throw InvalidArgument("maxwell_boltzmann N^n overflows 64 bits");
            }
            denom *= n_cells;
        }
        return Rational(numer, denom);
    }
    }
    throw InvalidArgument("invalid statistics family");
}

std::vector<Occupancy> enumerate_patterns(const ErrorStatisticsModel& model) {
    model.validate();
    std::vector<Occupancy> out;
    Occupancy prefix;
    const bool zero_one = model.family == StatsFamily::FermiDirac;
    enumerate_occupancies(model.n_cells, model.n_particles, zero_one, prefix, out);
    return out;
}

Occupancy sample_error_pattern(const ErrorStatisticsModel& model, RngStream& rng) {
    model.validate();
    const int n_cells = model.n_cells;
    const int n = model.n_particles;
    Occupancy occ(n_cells, 0);
    switch (model.family) {
    case StatsFamily::BoseEinstein: {
        // Multisets of size n from N cells are in bijection with n-subsets of
        // {0..N+n-2}: sorted positions p_i map to values p_i - i.
        const std::uint64_t count = binomial(n_cells + n - 1, n);
        const std::vector<int> positions = unrank_combination(rng.below(count), n_cells + n - 1, n);
        for (int i = 0; i < n; ++i) {
            occ[positions[i] - i] += 1;
        }
        break;
    }
    case StatsFamily::FermiDirac: {
        const std::uint64_t count = binomial(n_cells, n);
        for (int cell : unrank_combination(rng.below(count), n_cells, n)) {
            occ[cell] = 1;
        }
        break;
    }
    case StatsFamily::MaxwellBoltzmann:
        for (int i = 0; i < n; ++i) {
            occ[rng.below(static_cast<std::uint64_t>(n_cells))] += 1;
        }
        break;
    }
    return occ;
}

void apply_pattern_errors(RegisterState& state, const Occupancy& pattern,
                          double sigma_rotation, RngStream& rng) {
    if (pattern.size() != static_cast<std::size_t>(state.n_qubits())) {
        throw InvalidArgument("pattern length must equal the register size");
    }
    for (std::size_t cell = 0; cell < pattern.size(); ++cell) {
        for (int hit = 0; hit < pattern[cell]; ++hit) {
            state.apply(random_unitary_error(sigma_rotation, rng, static_cast<int>(cell)));
        }
    }
}

} // namespace qphase
