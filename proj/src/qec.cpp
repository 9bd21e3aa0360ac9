#include "qphase/qec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qphase/io.hpp"

namespace qphase {

namespace {

// Mask for qubit q in amplitude-index space (qubit 0 is the leftmost ket
// position, i.e. the most significant index bit).
std::uint32_t qubit_mask(int n_physical, int qubit) {
    return std::uint32_t{1} << (n_physical - 1 - qubit);
}

bool parity(std::uint64_t bits) {
    return (std::popcount(bits) & 1) != 0;
}

} // namespace

void apply_pauli(RegisterState& state, const PauliString& p) {
    auto amps = state.amps_mut();
    const std::uint64_t n = amps.size();
    if (p.x_mask >= n || p.z_mask >= n) {
        throw InvalidArgument("Pauli mask exceeds the register");
    }
    if (p.z_mask) {
        for (std::uint64_t k = 0; k < n; ++k) {
            if (parity(k & p.z_mask)) {
                amps[k] = -amps[k];
            }
        }
    }
    if (p.x_mask) {
        for (std::uint64_t k = 0; k < n; ++k) {
            const std::uint64_t j = k ^ p.x_mask;
            if (k < j) {
                std::swap(amps[k], amps[j]);
            }
        }
    }
}

double pauli_expectation(const RegisterState& state, const PauliString& p) {
    const auto amps = state.amps();
    const std::uint64_t n = amps.size();
    if (p.x_mask >= n || p.z_mask >= n) {
        throw InvalidArgument("Pauli mask exceeds the register");
    }
    std::vector<double> terms(n);
    for (std::uint64_t y = 0; y < n; ++y) {
        const std::uint64_t x = y ^ p.x_mask;
        const double sign = parity(x & p.z_mask) ? -1.0 : 1.0;
        terms[y] = sign * (std::conj(amps[y]) * amps[x]).real();
    }
    return pairwise_sum(std::span<const double>(terms));
}

int measure_pauli(RegisterState& state, const PauliString& p, RngStream& rng) {
    const double expectation = pauli_expectation(state, p);
    const double p_plus = std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
    const int outcome = rng.uniform() < p_plus ? 0 : 1;

    // Project onto (I +- P)/2 and renormalize with the branch norm.
    RegisterState flipped = state;
    apply_pauli(flipped, p);
    const double sign = outcome == 0 ? 1.0 : -1.0;
    auto amps = state.amps_mut();
    const auto f = flipped.amps();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        amps[k] = 0.5 * (amps[k] + sign * f[k]);
    }
    const double branch = state.norm_sq();
    if (branch < 1e-14) {
        throw DegenerateMeasurement("stabilizer projection hit a zero-norm branch");
    }
    const double inv = 1.0 / std::sqrt(branch);
    for (Amp& a : amps) {
        a *= inv;
    }
    return outcome;
}

void apply_flip_error(RegisterState& state, const FlipError& error) {
    if (error.qubit < 0 || error.qubit >= state.n_qubits()) {
        throw InvalidArgument("flip error qubit out of range");
    }
    const std::uint32_t m = qubit_mask(state.n_qubits(), error.qubit);
    PauliString p;
    switch (error.kind) {
    case FlipKind::BitFlip:
        p.x_mask = m;
        break;
    case FlipKind::PhaseFlip:
        p.z_mask = m;
        break;
    case FlipKind::Both:
        p.x_mask = m;
        p.z_mask = m;
        break;
    }
    apply_pauli(state, p);
}

CodeSpec::CodeSpec(std::string name, int n_physical, RegisterState zero, RegisterState one,
                   std::vector<PauliString> stabilizers, std::vector<PauliString> table)
    : name_(std::move(name)),
      n_physical_(n_physical),
      zero_(std::move(zero)),
      one_(std::move(one)),
      stabilizers_(std::move(stabilizers)),
      correction_table_(std::move(table)) {
    self_check();
}

void CodeSpec::self_check() const {
    constexpr double tol = 1e-12;
    if (std::abs(zero_.norm_sq() - 1.0) > tol || std::abs(one_.norm_sq() - 1.0) > tol) {
        throw std::logic_error(name_ + ": codewords are not normalized");
    }
    std::vector<Amp> terms(zero_.dim());
    for (std::uint64_t k = 0; k < zero_.dim(); ++k) {
        terms[k] = std::conj(zero_.amps()[k]) * one_.amps()[k];
    }
    if (std::abs(pairwise_sum(std::span<const Amp>(terms))) > tol) {
        throw std::logic_error(name_ + ": codewords are not orthogonal");
    }
    for (std::size_t i = 0; i < stabilizers_.size(); ++i) {
        for (std::size_t j = i + 1; j < stabilizers_.size(); ++j) {
            const bool anticommute = parity(stabilizers_[i].x_mask & stabilizers_[j].z_mask) !=
                                     parity(stabilizers_[i].z_mask & stabilizers_[j].x_mask);
            if (anticommute) {
                throw std::logic_error(name_ + ": stabilizers do not commute");
            }
        }
        if (std::abs(pauli_expectation(zero_, stabilizers_[i]) - 1.0) > tol ||
            std::abs(pauli_expectation(one_, stabilizers_[i]) - 1.0) > tol) {
            throw std::logic_error(name_ + ": stabilizer does not fix the codewords");
        }
    }
    if (correction_table_.size() != (std::size_t{1} << stabilizers_.size())) {
        throw std::logic_error(name_ + ": correction table size mismatch");
    }
}

RegisterState CodeSpec::encode(Amp a, Amp b) const {
    const double norm = std::norm(a) + std::norm(b);
    if (std::abs(norm - 1.0) > kNormTol) {
        throw InvalidArgument("logical amplitudes must be normalized: |a|^2 + |b|^2 = " +
                              format_g17(norm));
    }
    std::vector<Amp> amps(zero_.dim(), Amp{0, 0});
    for (std::uint64_t k = 0; k < zero_.dim(); ++k) {
        amps[k] = a * zero_.amps()[k] + b * one_.amps()[k];
    }
    return RegisterState(n_physical_, std::move(amps));
}

RegisterState CodeSpec::encode(const RegisterState& one_qubit) const {
    if (one_qubit.n_qubits() != 1) {
        throw InvalidArgument("encode expects a single-qubit state");
    }
    return encode(one_qubit.amp(0), one_qubit.amp(1));
}

std::vector<int> CodeSpec::extract_syndrome(RegisterState& state, RngStream& rng) const {
    if (state.n_qubits() != n_physical_) {
        throw InvalidArgument("state size does not match the code");
    }
    std::vector<int> bits;
    bits.reserve(stabilizers_.size());
    for (const PauliString& s : stabilizers_) {
        bits.push_back(measure_pauli(state, s, rng));
    }
    return bits;
}

void CodeSpec::correct(RegisterState& state, std::span<const int> syndrome) const {
    if (state.n_qubits() != n_physical_) {
        throw InvalidArgument("state size does not match the code");
    }
    if (syndrome.size() != stabilizers_.size()) {
        throw InvalidArgument("syndrome length does not match the stabilizer count");
    }
    std::size_t packed = 0;
    for (std::size_t i = 0; i < syndrome.size(); ++i) {
        if (syndrome[i] != 0 && syndrome[i] != 1) {
            throw InvalidArgument("syndrome bits must be 0 or 1");
        }
        packed |= static_cast<std::size_t>(syndrome[i]) << i;
    }
    if (packed >= correction_table_.size()) {
        throw UncorrectableSyndrome(name_ + ": syndrome outside the correction table");
    }
    apply_pauli(state, correction_table_[packed]);
}

namespace {

RegisterState make_codeword(int n_physical, const std::vector<std::pair<std::uint32_t, double>>& terms) {
    std::vector<Amp> amps(std::uint64_t{1} << n_physical, Amp{0, 0});
    for (const auto& [index, coeff] : terms) {
        amps[index] = Amp{coeff, 0.0};
    }
    return RegisterState(n_physical, std::move(amps));
}

CodeSpec build_shor9() {
    // |0_L> = (|000>+|111>)^x3 / (2 sqrt 2); |1_L> flips the inner signs.
    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    std::vector<std::pair<std::uint32_t, double>> zero_terms;
    std::vector<std::pair<std::uint32_t, double>> one_terms;
    for (int t0 : {0, 7}) {
        for (int t1 : {0, 7}) {
            for (int t2 : {0, 7}) {
                const auto index = static_cast<std::uint32_t>(t0 * 64 + t1 * 8 + t2);
                const int ones_triples = (t0 ? 1 : 0) + (t1 ? 1 : 0) + (t2 ? 1 : 0);
                zero_terms.push_back({index, c});
                one_terms.push_back({index, (ones_triples & 1) ? -c : c});
            }
        }
    }

    // Syndrome bits 0..5: Z-pair checks inside each triple (bit flips);
    // bits 6..7: X checks over triple pairs (phase flips).
    auto zz = [](int qa, int qb) {
        return PauliString{0, qubit_mask(9, qa) | qubit_mask(9, qb)};
    };
    auto x_block = [](int first, int last) {
        std::uint32_t m = 0;
        for (int q = first; q <= last; ++q) {
            m |= qubit_mask(9, q);
        }
        return PauliString{m, 0};
    };
    std::vector<PauliString> stabilizers = {
        zz(0, 1), zz(1, 2), zz(3, 4), zz(4, 5), zz(6, 7), zz(7, 8),
        x_block(0, 5), x_block(3, 8),
    };

    std::vector<PauliString> table(256);
    for (int syn = 0; syn < 256; ++syn) {
        PauliString corr;
        for (int t = 0; t < 3; ++t) {
            const int sa = (syn >> (2 * t)) & 1;
            const int sb = (syn >> (2 * t + 1)) & 1;
            int pos = -1;
            if (sa == 1 && sb == 0) {
                pos = 0;
            } else if (sa == 1 && sb == 1) {
                pos = 1;
            } else if (sa == 0 && sb == 1) {
                pos = 2;
            }
            if (pos >= 0) {
                corr.x_mask |= qubit_mask(9, 3 * t + pos);
            }
        }
        const int pa = (syn >> 6) & 1;
        const int pb = (syn >> 7) & 1;
        // A phase flip anywhere in a triple is equivalent on the codespace to
        // one on its first qubit (the Z-pairs inside the triple are checks).
        if (pa == 1 && pb == 0) {
            corr.z_mask |= qubit_mask(9, 0);
        } else if (pa == 1 && pb == 1) {
            corr.z_mask |= qubit_mask(9, 3);
        } else if (pa == 0 && pb == 1) {
            corr.z_mask |= qubit_mask(9, 6);
        }
        table[syn] = corr;
    }

    return CodeSpec("shor9", 9,
                    make_codeword(9, zero_terms), make_codeword(9, one_terms),
                    std::move(stabilizers), std::move(table));
}

CodeSpec build_steane7() {
    // Codewords of the 7-qubit code: |0_L> on the even-weight strings,
    // |1_L> on their complements, all with amplitude 1/sqrt(8).
    static constexpr std::uint32_t kZeroStrings[8] = {
        0b0000000, 0b0001111, 0b0110011, 0b0111100,
        0b1010101, 0b1011010, 0b1100110, 0b1101001,
    };
    static constexpr std::uint32_t kOneStrings[8] = {
        0b1111111, 0b1110000, 0b1001100, 0b1000011,
        0b0101010, 0b0100101, 0b0011001, 0b0010110,
    };
    const double c = 1.0 / std::sqrt(8.0);
    std::vector<std::pair<std::uint32_t, double>> zero_terms;
    std::vector<std::pair<std::uint32_t, double>> one_terms;
    for (std::uint32_t s : kZeroStrings) {
        zero_terms.push_back({s, c});
    }
    for (std::uint32_t s : kOneStrings) {
        one_terms.push_back({s, c});
    }

    // Hamming parity-check rows over qubit positions 1..7: row r has 1s where
    // position j (1-based) has bit r set, so a single flip at position j
    // yields syndrome value j. Bits 0..2 are the checks in the computational
    // basis (bit flips, Z type), bits 3..5 the same checks in the conjugate
    // basis (phase flips, X type).
    static constexpr std::uint32_t kHammingRows[3] = {0b1010101, 0b0110011, 0b0001111};
    std::vector<PauliString> stabilizers;
    for (std::uint32_t row : kHammingRows) {
        stabilizers.push_back(PauliString{0, row});
    }
    for (std::uint32_t row : kHammingRows) {
        stabilizers.push_back(PauliString{row, 0});
    }

    std::vector<PauliString> table(64);
    for (int syn = 0; syn < 64; ++syn) {
        PauliString corr;
        const int vb = syn & 7;        // 1-based flipped position, 0 = clean
        const int vp = (syn >> 3) & 7;
        if (vb) {
            corr.x_mask = qubit_mask(7, vb - 1);
        }
        if (vp) {
            corr.z_mask = qubit_mask(7, vp - 1);
        }
        table[syn] = corr;
    }

    return CodeSpec("steane7", 7,
                    make_codeword(7, zero_terms), make_codeword(7, one_terms),
                    std::move(stabilizers), std::move(table));
}

} // namespace

const CodeSpec& CodeSpec::shor9() {
    static const CodeSpec code = build_shor9();
    return code;
}

const CodeSpec& CodeSpec::steane7() {
    static const CodeSpec code = build_steane7();
    return code;
}

const CodeSpec& CodeSpec::by_name(std::string_view name) {
    if (name == "shor9") {
        return shor9();
    }
    if (name == "steane7") {
        return steane7();
    }
    throw InvalidArgument("unknown code: " + std::string(name));
}

QecTrialRecord analog_stress_trial(const CodeSpec& code, double sigma_rotation, Amp a, Amp b,
                                   RngStream& rng, RegisterState* corrected_state) {
    if (!(sigma_rotation >= 0.0)) {
        throw InvalidArgument("sigma_rotation must be nonnegative");
    }
    const RegisterState reference = code.encode(a, b);
    RegisterState state = reference;
    for (int q = 0; q < code.n_physical(); ++q) {
        state.apply(random_unitary_error(sigma_rotation, rng, q));
    }
    QecTrialRecord rec;
    rec.error_description = "analog rotation sigma=" + format_g17(sigma_rotation) +
                            " on all " + std::to_string(code.n_physical()) + " qubits";
    rec.component_count_after = component_count(state, kComponentThreshold);
    rec.syndrome_bits = code.extract_syndrome(state, rng);
    code.correct(state, rec.syndrome_bits);
    rec.fidelity_after = fidelity(state, reference);
    rec.residual_infidelity = 1.0 - rec.fidelity_after;
    rec.corrected = rec.fidelity_after >= 1.0 - 1e-10;
    if (corrected_state != nullptr) {
        *corrected_state = state;
    }
    return rec;
}

AnalogStressSummary analog_stress(const CodeSpec& code, double sigma_rotation, int trials,
                                  Amp a, Amp b, RngStream& rng) {
    if (trials < 1) {
        throw InvalidArgument("trials must be at least 1");
    }
    AnalogStressSummary summary;
    summary.trials.reserve(trials);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < trials; ++i) {
        QecTrialRecord rec = analog_stress_trial(code, sigma_rotation, a, b, rng);
        sum += rec.residual_infidelity;
        sum_sq += rec.residual_infidelity * rec.residual_infidelity;
        summary.max_residual = std::max(summary.max_residual, rec.residual_infidelity);
        summary.component_histogram[rec.component_count_after] += 1;
        summary.trials.push_back(std::move(rec));
    }
    const double n = static_cast<double>(trials);
    summary.mean_residual = sum / n;
    const double var = trials > 1 ? std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0)) : 0.0;
    const double half_width = 1.96 * std::sqrt(var / n);
    summary.ci95_lo = summary.mean_residual - half_width;
    summary.ci95_hi = summary.mean_residual + half_width;
    return summary;
}

QecTrialRecord shor_single_decoherence_demo(double gamma, int qubit, RngStream& rng) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw InvalidArgument("gamma must be in [0, 1]");
    }
    const CodeSpec& code = CodeSpec::shor9();
    if (qubit < 0 || qubit >= code.n_physical()) {
        throw InvalidArgument("qubit out of range for the 9-qubit code");
    }
    const Amp a{0.6, 0.0};
    const Amp b{0.8, 0.0};
    const RegisterState reference = code.encode(a, b);
    RegisterState state = reference;

    const double theta = std::asin(std::sqrt(gamma));
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    state.apply(gates::compose(gates::phase_shift(qubit, phi), gates::rotation(qubit, theta)));

    QecTrialRecord rec;
    rec.error_description = "single-qubit decay gamma=" + format_g17(gamma) +
                            " qubit=" + std::to_string(qubit);
    rec.component_count_after = component_count(state, kComponentThreshold);
    rec.syndrome_bits = code.extract_syndrome(state, rng);
    code.correct(state, rec.syndrome_bits);
    rec.fidelity_after = fidelity(state, reference);
    rec.residual_infidelity = 1.0 - rec.fidelity_after;
    rec.corrected = rec.fidelity_after >= 1.0 - 1e-10;
    return rec;
}

} // namespace qphase
