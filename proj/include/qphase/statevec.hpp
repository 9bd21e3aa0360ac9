#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qphase/errors.hpp"
#include "qphase/rng.hpp"

namespace qphase {

using Amp = std::complex<double>;

// Shared numerical contract: gates must be unitary to kUnitarityTol and
// states are expected to stay normalized to kNormTol. Double precision
// throughout; drift is reported, never silently renormalized away.
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr int kMinQubits = 1;
inline constexpr int kMaxQubits = 20;

// Balanced (pairwise) summation. Besides the usual accuracy gain, summing a
// power-of-two count of identical values is exact, which keeps the uniform
// state a bit-exact fixed point of the diffusion transform.
template <typename T>
T pairwise_sum(std::span<const T> v) {
    switch (v.size()) {
    case 0:
        return T{};
    case 1:
        return v[0];
    case 2:
        return v[0] + v[1];
    default: {
        const std::size_t half = v.size() / 2;
        return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
    }
    }
}

// A 1- or 2-qubit unitary acting on explicit wire indices.
//
// Convention (fixed project-wide): wire 0 is the leftmost, most significant
// qubit of the ket, so the basis label |q_0 q_1 ... q_{n-1}> maps to the
// amplitude index sum_i q_i * 2^(n-1-i). A 4x4 matrix is indexed by
// |q_{wires[0]} q_{wires[1]}>, i.e. row = 2*a + b for <a b|. Non-adjacent
// wires are handled by index arithmetic, not swap networks.
struct GateMatrix {
    int dim = 2;                 // 2 or 4
    std::vector<Amp> entries;    // row-major, dim*dim
    std::vector<int> wires;      // 1 or 2 distinct wire indices

    static GateMatrix single(const std::array<Amp, 4>& e, int wire);
    static GateMatrix two(const std::array<Amp, 16>& e, int wire_a, int wire_b);

    Amp at(int row, int col) const { return entries[static_cast<std::size_t>(row) * dim + col]; }

    // max-abs entry of U†U - I.
    double unitarity_defect() const;

    // Throws InvalidGate if the matrix is not unitary to kUnitarityTol or the
    // wiring is malformed.
    void validate() const;

    GateMatrix dagger() const;
};

namespace gates {

GateMatrix identity(int wire);
// The 1/sqrt(2) [[1,1],[1,-1]] basis-mixing transform.
GateMatrix hadamard(int wire);
GateMatrix pauli_x(int wire);
GateMatrix pauli_z(int wire);
// diag(1, e^{i theta})
GateMatrix phase_shift(int wire, double theta);
// Real rotation [[cos, -sin], [sin, cos]]
GateMatrix rotation(int wire, double angle);
// e^{i phi} * g (scalar phase baked into the entries).
GateMatrix with_global_phase(const GateMatrix& g, double phi);
// Controlled version of a single-qubit gate: identity on the control-0
// block, u on the control-1 block.
GateMatrix controlled(const GateMatrix& u, int control, int target);
// Product a*b of two single-qubit gates on the same wire (apply b first).
GateMatrix compose(const GateMatrix& a, const GateMatrix& b);

} // namespace gates

// Dense state vector of an n-qubit register: 2^n complex amplitudes, indexed
// by the convention documented on GateMatrix. Register states are plain
// values; hand copies between threads freely, parallelism lives at the
// trial level.
class RegisterState {
public:
    RegisterState(int n_qubits, std::vector<Amp> amps);

    static RegisterState basis(int n_qubits, std::uint64_t basis_index);
    // Equal amplitudes 1/sqrt(N) on every basis state.
    static RegisterState uniform(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    std::span<const Amp> amps() const { return amps_; }
    Amp amp(std::uint64_t k) const;

    // Mutable amplitude access for modules that build or decay states
    // directly (encoders, decay models); the norm contract is the caller's.
    std::span<Amp> amps_mut() { return amps_; }

    void apply(const GateMatrix& gate);
    // Multiply every amplitude by e^{i theta}.
    void apply_global_phase(double theta);
    // Multiply amplitude k by e^{i thetas[k]}.
    void apply_phase_vector(std::span<const double> thetas);

    // Born-rule sample of a basis index; collapses the state to it.
    // Requires a normalized state (norm drift beyond kNormTol is reported as
    // NumericalError, not hidden).
    std::uint64_t measure_all(RngStream& rng);

    double norm_sq() const;
    // Explicit renormalization; throws NumericalError on numerically zero norm.
    void renormalize();

private:
    void check_wires(const GateMatrix& gate) const;

    int n_qubits_;
    std::vector<Amp> amps_;
};

// |<a|b>|^2, symmetric, 1 iff the states agree up to a global phase.
double fidelity(const RegisterState& a, const RegisterState& b);

// Number of basis indices with |amp|^2 strictly above threshold.
std::uint64_t component_count(const RegisterState& s, double threshold);

std::vector<double> probabilities(const RegisterState& s);

} // namespace qphase
