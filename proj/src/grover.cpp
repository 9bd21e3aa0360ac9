#include "qphase/grover.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qphase {

int grover_nominal_iterations(int n_qubits) {
    const double n = static_cast<double>(std::uint64_t{1} << n_qubits);
    return static_cast<int>(std::round(std::numbers::pi / 4.0 * std::sqrt(n)));
}

int GroverPlan::resolved_iterations() const {
    return iterations < 0 ? grover_nominal_iterations(n_qubits) : iterations;
}

void GroverPlan::validate() const {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw InvalidArgument("n_qubits must be in 1..20");
    }
    if (marked_index >= (std::uint64_t{1} << n_qubits)) {
        throw InvalidArgument("marked_index out of range");
    }
}

void oracle_apply(RegisterState& state, std::uint64_t marked_index, double eps) {
    if (marked_index >= state.dim()) {
        throw InvalidArgument("marked_index " + std::to_string(marked_index) +
                              " out of range for dimension " + std::to_string(state.dim()));
    }
    Amp factor;
    if (eps == 0.0) {
        factor = Amp{-1.0, 0.0};
    } else {
        const double phi = std::numbers::pi + eps;
        factor = Amp{std::cos(phi), std::sin(phi)};
    }
    state.amps_mut()[marked_index] *= factor;
}

void diffusion_apply(RegisterState& state) {
    const Amp mean = pairwise_sum(state.amps()) / static_cast<double>(state.dim());
    const Amp twice = 2.0 * mean;
    for (Amp& a : state.amps_mut()) {
        a = twice - a;
    }
}

GroverRunResult grover_run(const GroverPlan& plan, const GroverNoise* noise, RngStream& rng) {
    plan.validate();
    RegisterState state = (noise && noise->init)
                              ? noisy_initialize(plan.n_qubits, *noise->init, rng)
                              : RegisterState::uniform(plan.n_qubits);

    const int rounds = plan.resolved_iterations();
    std::vector<GroverTracePoint> trace;
    trace.reserve(static_cast<std::size_t>(rounds) + 1);
    auto record = [&](int iter) {
        const Amp marked = state.amp(plan.marked_index);
        trace.push_back({iter, marked, std::norm(marked)});
    };
    record(0);

    const double kick_sigma = noise ? noise->per_iteration_walk_sigma : 0.0;
    std::vector<double> kicks;
    if (kick_sigma > 0.0) {
        kicks.resize(state.dim());
    }
    for (int iter = 1; iter <= rounds; ++iter) {
        if (kick_sigma > 0.0) {
            for (double& k : kicks) {
                k = rng.gaussian(kick_sigma);
            }
            state.apply_phase_vector(kicks);
        }
        oracle_apply(state, plan.marked_index, plan.oracle_phase_error_eps);
        diffusion_apply(state);
        record(iter);
    }
    return {std::move(trace), std::move(state)};
}

AmplitudeErrorResult amplitude_error_one_step(int n_qubits, double eps) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw InvalidArgument("n_qubits must be in 1..20");
    }
    const double n = static_cast<double>(std::uint64_t{1} << n_qubits);

    auto one_step = [&](double oracle_eps) {
        RegisterState state = RegisterState::uniform(n_qubits);
        oracle_apply(state, 0, oracle_eps);
        diffusion_apply(state);
        return state.amp(0);
    };
    const Amp delta = one_step(eps) - one_step(0.0);
    const double formula = (1.0 / std::sqrt(n)) * (-eps + 2.0 * eps / n);
    return {-delta.imag(), formula};
}

} // namespace qphase
