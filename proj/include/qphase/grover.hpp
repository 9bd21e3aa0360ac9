#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qphase/noise.hpp"
#include "qphase/statevec.hpp"

namespace qphase {

struct GroverPlan {
    int n_qubits = 1;
    std::uint64_t marked_index = 0;
    // Negative requests the nominal schedule round(pi/4 * sqrt(N)); ties
    // round half away from zero (std::round).
    int iterations = -1;
    // Perturbation of the marked state's pi rotation, radians.
    double oracle_phase_error_eps = 0.0;

    int resolved_iterations() const;
    void validate() const;
};

// Noise injected into a Grover run. Per-iteration kicks model the phase
// random walk accumulated between gate applications; they hit every basis
// state independently, right before the oracle.
struct GroverNoise {
    std::optional<InitPhaseNoise> init;
    double per_iteration_walk_sigma = 0.0;
};

struct GroverTracePoint {
    int iteration; // 0 = after initialization, before any oracle
    Amp marked_amplitude;
    double success_prob;
};

struct GroverRunResult {
    std::vector<GroverTracePoint> trace;
    RegisterState final_state;
};

int grover_nominal_iterations(int n_qubits);

// Multiply the marked amplitude by e^{i(pi + eps)}; eps = 0 is the exact
// sign flip.
void oracle_apply(RegisterState& state, std::uint64_t marked_index, double eps);

// Inversion about the mean, O(N): out_k = 2*mean - amp_k. The mean is
// computed with balanced summation, so the uniform state is a bit-exact
// fixed point.
void diffusion_apply(RegisterState& state);

// Full run: initialize (noisy if init noise given, clean uniform otherwise),
// then `iterations` rounds of [walk kick ->] oracle -> diffusion. The trace
// records the marked amplitude and success probability after initialization
// (iteration 0) and after each round.
GroverRunResult grover_run(const GroverPlan& plan, const GroverNoise* noise, RngStream& rng);

struct AmplitudeErrorResult {
    double simulated_delta;
    double formula_delta;
};

// One oracle+diffusion step from the uniform state with oracle phase pi+eps
// versus pi, all other phases exact (the "other errors cancel out"
// assumption). The first-order deviation of the marked amplitude sits in
// quadrature with its unperturbed (real) direction; its signed size, oriented
// so that positive eps reduces the effective amplitude, is -Im(delta). It
// matches the closed form (1/sqrt(N)) * (-eps + 2*eps/N) to O(eps^2).
AmplitudeErrorResult amplitude_error_one_step(int n_qubits, double eps);

} // namespace qphase
