#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qphase/noise.hpp"
#include "qphase/statevec.hpp"

namespace qphase {

// Pauli product over a register, encoded as masks in amplitude-index space
// (bit n-1-q of a mask corresponds to qubit q). Acts as
//   P|x> = (-1)^popcount(x & z_mask) |x ^ x_mask>
// i.e. Z factors first, then X factors. Pure-type strings (only X or only Z)
// are what the codes below need; mixed masks realize ZX per qubit.
struct PauliString {
    std::uint32_t x_mask = 0;
    std::uint32_t z_mask = 0;
};

void apply_pauli(RegisterState& state, const PauliString& p);
// <psi|P|psi>, real part (the strings used here are Hermitian).
double pauli_expectation(const RegisterState& state, const PauliString& p);
// Projective measurement of the +-1 observable P: Born-samples an outcome,
// projects and renormalizes. Returns 0 for the +1 eigenvalue, 1 for -1.
int measure_pauli(RegisterState& state, const PauliString& p, RngStream& rng);

enum class FlipKind { BitFlip, PhaseFlip, Both };

struct FlipError {
    FlipKind kind = FlipKind::BitFlip;
    int qubit = 0;
};

// X, Z, or ZX on one qubit: takes the qubit's amplitude pair (a, b) to
// (b, a), (a, -b), or (-b, a).
void apply_flip_error(RegisterState& state, const FlipError& error);

// Threshold used for component counting throughout the QEC experiments.
inline constexpr double kComponentThreshold = 1e-12;

struct QecTrialRecord {
    std::string error_description;
    std::vector<int> syndrome_bits;
    bool corrected = false; // recovery fidelity reached 1 - 1e-10
    double fidelity_after = 0.0;
    std::uint64_t component_count_after = 0; // counted after error, before syndrome projection
    double residual_infidelity = 0.0;
};

// Stabilizer code description: codeword superpositions, parity checks, and a
// total syndrome -> correction table. Instances are immutable singletons;
// construction verifies codeword orthonormality and that every check fixes
// both codewords.
class CodeSpec {
public:
    static const CodeSpec& shor9();
    static const CodeSpec& steane7();
    static const CodeSpec& by_name(std::string_view name); // "shor9" | "steane7"

    std::string_view name() const { return name_; }
    int n_physical() const { return n_physical_; }
    int syndrome_size() const { return static_cast<int>(stabilizers_.size()); }
    std::span<const PauliString> stabilizers() const { return stabilizers_; }
    const RegisterState& logical_zero() const { return zero_; }
    const RegisterState& logical_one() const { return one_; }

    // a|0_L> + b|1_L>; requires |a|^2 + |b|^2 = 1 to kNormTol.
    RegisterState encode(Amp a, Amp b) const;
    RegisterState encode(const RegisterState& one_qubit) const;

    // Measures every stabilizer projectively, in order; bit i is the outcome
    // of stabilizers()[i]. The state collapses accordingly.
    std::vector<int> extract_syndrome(RegisterState& state, RngStream& rng) const;

    // Applies the table's correction for the given syndrome. Throws
    // UncorrectableSyndrome for bits outside the table.
    void correct(RegisterState& state, std::span<const int> syndrome) const;

private:
    CodeSpec(std::string name, int n_physical, RegisterState zero, RegisterState one,
             std::vector<PauliString> stabilizers, std::vector<PauliString> table);
    void self_check() const;

    std::string name_;
    int n_physical_;
    RegisterState zero_;
    RegisterState one_;
    std::vector<PauliString> stabilizers_;
    // Indexed by packed syndrome (bit i of the index = syndrome bit i).
    std::vector<PauliString> correction_table_;
};

// One analog-error trial: encode a|0_L> + b|1_L>, hit EVERY physical qubit
// with an independent random unitary error of the given sigma, count the
// surviving components, then extract the syndrome and correct. When
// `corrected_state` is non-null it receives the post-correction state.
QecTrialRecord analog_stress_trial(const CodeSpec& code, double sigma_rotation, Amp a, Amp b,
                                   RngStream& rng, RegisterState* corrected_state = nullptr);

struct AnalogStressSummary {
    std::vector<QecTrialRecord> trials;
    double mean_residual = 0.0;
    double max_residual = 0.0;
    double ci95_lo = 0.0;
    double ci95_hi = 0.0;
    std::map<std::uint64_t, std::uint64_t> component_histogram;
};

AnalogStressSummary analog_stress(const CodeSpec& code, double sigma_rotation, int trials,
                                  Amp a, Amp b, RngStream& rng);

// A single qubit of a Shor codeword decays: rotation by arcsin(sqrt(gamma))
// composed with a random phase rotation, then syndrome extraction and
// correction. Any such single-qubit error is correctable, so the recovery
// fidelity is 1 for every gamma and qubit. Reference logical state (0.6, 0.8).
QecTrialRecord shor_single_decoherence_demo(double gamma, int qubit, RngStream& rng);

} // namespace qphase
