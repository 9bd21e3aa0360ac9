#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "qphase/rng.hpp"
#include "qphase/statevec.hpp"

namespace qphase {

// ---------------------------------------------------------------------------
// Initialization phase noise
// ---------------------------------------------------------------------------

enum class PhaseMode {
    // One phase pair (theta_i1, theta_i2) per qubit; the register is the
    // tensor product of the per-qubit superpositions, so N basis phases are
    // parameterized by only 2n draws.
    PerQubit,
    // One independent phase per basis state.
    PerBasisState,
};

struct InitPhaseNoise {
    PhaseMode mode = PhaseMode::PerBasisState;
    double sigma = 0.0;    // std of the Gaussian phase draw, radians
    bool uniform = false;  // draw theta ~ U[0, 2pi) instead (fully unknown phase)
};

// Uniform-magnitude superposition (every |amp| = 1/sqrt(N)) with phases drawn
// per the model. Per-basis probabilities are untouched by construction.
//
// Draw order (pinned for reproducibility): per_qubit draws theta_{i,0} then
// theta_{i,1} for qubits i = 0..n-1; per_basis_state draws theta_k for
// k = 0..N-1 ascending.
RegisterState noisy_initialize(int n_qubits, const InitPhaseNoise& model, RngStream& rng);

// ---------------------------------------------------------------------------
// Gate-level errors
// ---------------------------------------------------------------------------

// The 2x2 error form  1/sqrt(|e1|^2+|e2|^2) [[e1*, e2*], [e2, -e1]].
struct GeneralUnitaryError {
    Amp e1;
    Amp e2;

    GateMatrix to_gate(int wire) const; // throws InvalidArgument if e1 = e2 = 0
};

// Near-identity random unitary: rotation angle ~ Gaussian(0, sigma) plus two
// independent Gaussian(0, sigma) phases,
//   [[cos(r) e^{ia}, -sin(r) e^{ib}], [sin(r) e^{-ib}, cos(r) e^{-ia}]].
// sigma = 0 returns the identity exactly. Draw order: r, a, b.
GateMatrix random_unitary_error(double sigma_rotation, RngStream& rng, int wire = 0);

// Alternate mode for the fully general error: Haar-uniform over U(2).
// Parameterized as e^{ig} times the matrix above with cos(r)^2 uniform in
// [0,1] and a, b uniform in [0, 2pi). Draw order: u, a, b, g.
GateMatrix haar_random_unitary(RngStream& rng, int wire = 0);

// e^{i phi} * gate with phi ~ Gaussian(0, sigma): the unknown scalar phase
// every gate application carries. Harmless on a top-level gate, observable
// once the gate is embedded as a sub-block of a larger operation.
GateMatrix gate_phase_wrap(const GateMatrix& gate, double sigma, RngStream& rng);

// ---------------------------------------------------------------------------
// Phase random walk
// ---------------------------------------------------------------------------

struct PhaseWalkModel {
    double step_size_s = 0.0; // radians per step
    double tau = 1.0;         // characteristic step time, seconds
    std::uint64_t steps_m = 0;

    // Variance grows linearly: m * s^2 after m steps.
    double theoretical_variance() const {
        return static_cast<double>(steps_m) * step_size_s * step_size_s;
    }
};

// Accumulated phase after m steps: one Gaussian(0, s*sqrt(m)) draw, which is
// distributed identically to the sum of m independent Gaussian(0, s) steps.
// m = 0 returns 0 exactly and consumes nothing from the stream.
double phase_walk_sample(const PhaseWalkModel& model, RngStream& rng);

// ---------------------------------------------------------------------------
// Decoherence laws
// ---------------------------------------------------------------------------

struct DecoherenceModel {
    double t_d = 1.0;    // single-qubit decoherence time, seconds
    double lambda = 1.0; // decay rate for the p_t law
};

// e^{-t*n/t_d}, computed as the n-fold product of the single-qubit
// characteristic e^{-t/t_d} so the register value equals that product
// bit-exactly.
double decoherence_characteristic(const DecoherenceModel& model, double t, int n_qubits);

// p_t = 1 - lambda * e^{-lambda t}, implemented as printed. For lambda > 1
// the raw value is negative at small t; it is clamped to [0, 1] and the
// clamping is reported through `clamped`.
double decay_probability(const DecoherenceModel& model, double t, bool& clamped);
// Convenience overload; warns on stderr when clamping occurs.
double decay_probability(const DecoherenceModel& model, double t);

// Surviving amplitude fraction reported per trial: e^{-lambda t}.
double alpha_fraction(const DecoherenceModel& model, double t);

// ---------------------------------------------------------------------------
// Error-pattern statistics
// ---------------------------------------------------------------------------

enum class StatsFamily {
    BoseEinstein,     // uniform over multisets of cell occupancies
    FermiDirac,       // uniform over subsets (at most one per cell)
    MaxwellBoltzmann, // classical baseline: independent uniform placements
};

StatsFamily stats_family_from_string(std::string_view name);
std::string_view stats_family_name(StatsFamily family);

struct ErrorStatisticsModel {
    int n_cells = 1;     // N
    int n_particles = 0; // n
    StatsFamily family = StatsFamily::BoseEinstein;

    void validate() const;
};

// Occupancy counts per cell; sums to n_particles. Fermi-Dirac patterns are
// 0/1 valued.
using Occupancy = std::vector<int>;
using Rational = boost::rational<long long>;

// Exact pattern probability: BE 1/C(N+n-1, n), FD 1/C(N, n), MB the
// multinomial placement probability n!/(prod k_i!) / N^n.
Rational pattern_probability(const ErrorStatisticsModel& model, const Occupancy& pattern);

// All patterns of the family's space, in a fixed lexicographic order.
std::vector<Occupancy> enumerate_patterns(const ErrorStatisticsModel& model);

// Uniform draw over the family's pattern space (BE: multisets, FD: subsets,
// both via combination unranking; MB: independent placements reduced to an
// occupancy).
Occupancy sample_error_pattern(const ErrorStatisticsModel& model, RngStream& rng);

// Minimal mapping from an error pattern onto a register: cell i = qubit i,
// occupancy = number of independent random unitary errors applied there.
void apply_pattern_errors(RegisterState& state, const Occupancy& pattern,
                          double sigma_rotation, RngStream& rng);

// Exact binomial coefficient in 64 bits; throws InvalidArgument on overflow.
std::uint64_t binomial(int n, int k);

} // namespace qphase
