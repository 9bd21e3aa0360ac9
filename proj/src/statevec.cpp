#include "qphase/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qphase {

namespace {

Amp phase_factor(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

} // namespace

GateMatrix GateMatrix::single(const std::array<Amp, 4>& e, int wire) {
    GateMatrix g;
    g.dim = 2;
    g.entries.assign(e.begin(), e.end());
    g.wires = {wire};
    return g;
}

GateMatrix GateMatrix::two(const std::array<Amp, 16>& e, int wire_a, int wire_b) {
    GateMatrix g;
    g.dim = 4;
    g.entries.assign(e.begin(), e.end());
    g.wires = {wire_a, wire_b};
    return g;
}

double GateMatrix::unitarity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Amp prod = 0.0; // (U†U)_ij = sum_k conj(U_ki) U_kj
            for (int k = 0; k < dim; ++k) {
                prod += std::conj(at(k, i)) * at(k, j);
            }
            const Amp target = (i == j) ? Amp{1.0, 0.0} : Amp{0.0, 0.0};
            worst = std::max(worst, std::abs(prod - target));
        }
    }
    return worst;
}

void GateMatrix::validate() const {
    if (dim != 2 && dim != 4) {
        throw InvalidGate("gate dimension must be 2 or 4");
    }
    if (entries.size() != static_cast<std::size_t>(dim) * dim) {
        throw InvalidGate("gate entry count does not match its dimension");
    }
    const std::size_t expected_wires = (dim == 2) ? 1 : 2;
    if (wires.size() != expected_wires) {
        throw InvalidGate("gate wire count does not match its dimension");
    }
    if (dim == 4 && wires[0] == wires[1]) {
        throw InvalidArgument("two-qubit gate wires must be distinct");
    }
    const double defect = unitarity_defect();
    if (!(defect <= kUnitarityTol)) {
        throw InvalidGate("matrix is not unitary: max |U†U - I| = " + std::to_string(defect));
    }
}

GateMatrix GateMatrix::dagger() const {
    GateMatrix g = *this;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g.entries[static_cast<std::size_t>(i) * dim + j] = std::conj(at(j, i));
        }
    }
    return g;
}

namespace gates {

GateMatrix identity(int wire) {
    return GateMatrix::single({Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, Amp{1, 0}}, wire);
}

GateMatrix hadamard(int wire) {
    const double s = 1.0 / std::sqrt(2.0);
    return GateMatrix::single({Amp{s, 0}, Amp{s, 0}, Amp{s, 0}, Amp{-s, 0}}, wire);
}

GateMatrix pauli_x(int wire) {
    return GateMatrix::single({Amp{0, 0}, Amp{1, 0}, Amp{1, 0}, Amp{0, 0}}, wire);
}

GateMatrix pauli_z(int wire) {
    return GateMatrix::single({Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, Amp{-1, 0}}, wire);
}

GateMatrix phase_shift(int wire, double theta) {
    return GateMatrix::single({Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, phase_factor(theta)}, wire);
}

GateMatrix rotation(int wire, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return GateMatrix::single({Amp{c, 0}, Amp{-s, 0}, Amp{s, 0}, Amp{c, 0}}, wire);
}

GateMatrix with_global_phase(const GateMatrix& g, double phi) {
    GateMatrix out = g;
    const Amp f = phase_factor(phi);
    for (Amp& e : out.entries) {
        e *= f;
    }
    return out;
}

GateMatrix controlled(const GateMatrix& u, int control, int target) {
    if (u.dim != 2) {
        throw InvalidArgument("controlled() expects a single-qubit gate");
    }
    std::array<Amp, 16> e{}; // zero-initialized
    e[0 * 4 + 0] = Amp{1, 0};
    e[1 * 4 + 1] = Amp{1, 0};
    e[2 * 4 + 2] = u.at(0, 0);
    e[2 * 4 + 3] = u.at(0, 1);
    e[3 * 4 + 2] = u.at(1, 0);
    e[3 * 4 + 3] = u.at(1, 1);
    return GateMatrix::two(e, control, target);
}

GateMatrix compose(const GateMatrix& a, const GateMatrix& b) {
    if (a.dim != 2 || b.dim != 2 || a.wires != b.wires) {
        throw InvalidArgument("compose() expects two single-qubit gates on the same wire");
    }
    std::array<Amp, 4> e{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            e[static_cast<std::size_t>(i) * 2 + j] = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
        }
    }
    return GateMatrix::single(e, a.wires[0]);
}

} // namespace gates

RegisterState::RegisterState(int n_qubits, std::vector<Amp> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw InvalidArgument("n_qubits must be in 1..20, got " + std::to_string(n_qubits));
    }
    if (amps_.size() != (std::uint64_t{1} << n_qubits)) {
        throw InvalidArgument("amplitude vector length must be 2^n_qubits");
    }
}

RegisterState RegisterState::basis(int n_qubits, std::uint64_t basis_index) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw InvalidArgument("n_qubits must be in 1..20, got " + std::to_string(n_qubits));
    }
    const std::uint64_t n = std::uint64_t{1} << n_qubits;
    if (basis_index >= n) {
        throw InvalidArgument("basis_index " + std::to_string(basis_index) +
                              " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    std::vector<Amp> amps(n, Amp{0, 0});
    amps[basis_index] = Amp{1, 0};
    return RegisterState(n_qubits, std::move(amps));
}

RegisterState RegisterState::uniform(int n_qubits) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw InvalidArgument("n_qubits must be in 1..20, got " + std::to_string(n_qubits));
    }
    const std::uint64_t n = std::uint64_t{1} << n_qubits;
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    return RegisterState(n_qubits, std::vector<Amp>(n, Amp{a, 0}));
}

Amp RegisterState::amp(std::uint64_t k) const {
    if (k >= amps_.size()) {
        throw InvalidArgument("amplitude index out of range");
    }
    return amps_[k];
}

void RegisterState::check_wires(const GateMatrix& gate) const {
    for (int w : gate.wires) {
        if (w < 0 || w >= n_qubits_) {
            throw InvalidArgument("gate wire " + std::to_string(w) + " out of range for " +
                                  std::to_string(n_qubits_) + " qubits");
        }
    }
}

void RegisterState::apply(const GateMatrix& gate) {
    gate.validate();
    check_wires(gate);
    const std::uint64_t n = amps_.size();
    if (gate.dim == 2) {
        const std::uint64_t mask = std::uint64_t{1} << (n_qubits_ - 1 - gate.wires[0]);
        const Amp u00 = gate.at(0, 0), u01 = gate.at(0, 1);
        const Amp u10 = gate.at(1, 0), u11 = gate.at(1, 1);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (i & mask) {
                continue;
            }
            const Amp a = amps_[i];
            const Amp b = amps_[i | mask];
            amps_[i] = u00 * a + u01 * b;
            amps_[i | mask] = u10 * a + u11 * b;
        }
    } else {
        const std::uint64_t m0 = std::uint64_t{1} << (n_qubits_ - 1 - gate.wires[0]);
        const std::uint64_t m1 = std::uint64_t{1} << (n_qubits_ - 1 - gate.wires[1]);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (i & (m0 | m1)) {
                continue;
            }
            // Block index order matches |q_{wires[0]} q_{wires[1]}>.
            const std::uint64_t idx[4] = {i, i | m1, i | m0, i | m0 | m1};
            Amp in[4];
            for (int k = 0; k < 4; ++k) {
                in[k] = amps_[idx[k]];
            }
            for (int r = 0; r < 4; ++r) {
                Amp acc{0, 0};
                for (int c = 0; c < 4; ++c) {
                    acc += gate.at(r, c) * in[c];
                }
                amps_[idx[r]] = acc;
            }
        }
    }
}

void RegisterState::apply_global_phase(double theta) {
    const Amp f = phase_factor(theta);
    for (Amp& a : amps_) {
        a *= f;
    }
}

void RegisterState::apply_phase_vector(std::span<const double> thetas) {
    if (thetas.size() != amps_.size()) {
        throw InvalidArgument("phase vector length " + std::to_string(thetas.size()) +
                              " does not match state dimension " + std::to_string(amps_.size()));
    }
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        amps_[k] *= phase_factor(thetas[k]);
    }
}

std::uint64_t RegisterState::measure_all(RngStream& rng) {
    const double total = norm_sq();
    if (std::abs(total - 1.0) > kNormTol) {
        throw NumericalError("measure_all on unnormalized state: |norm^2 - 1| = " +
                             std::to_string(std::abs(total - 1.0)));
    }
    const double target = rng.uniform() * total;
    double acc = 0.0;
    std::uint64_t picked = amps_.size() - 1;
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        acc += std::norm(amps_[k]);
        if (acc > target) {
            picked = k;
            break;
        }
    }
    std::fill(amps_.begin(), amps_.end(), Amp{0, 0});
    amps_[picked] = Amp{1, 0};
    return picked;
}

double RegisterState::norm_sq() const {
    std::vector<double> sq(amps_.size());
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        sq[k] = std::norm(amps_[k]);
    }
    return pairwise_sum(std::span<const double>(sq));
}

void RegisterState::renormalize() {
    const double total = norm_sq();
    if (total < 1e-28) {
        throw NumericalError("renormalize on numerically zero state");
    }
    const double inv = 1.0 / std::sqrt(total);
    for (Amp& a : amps_) {
        a *= inv;
    }
}

double fidelity(const RegisterState& a, const RegisterState& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw InvalidArgument("fidelity requires states of equal size");
    }
    std::vector<Amp> terms(a.dim());
    for (std::uint64_t k = 0; k < a.dim(); ++k) {
        terms[k] = std::conj(a.amps()[k]) * b.amps()[k];
    }
    const Amp overlap = pairwise_sum(std::span<const Amp>(terms));
    return std::norm(overlap);
}

std::uint64_t component_count(const RegisterState& s, double threshold) {
    if (threshold < 0.0) {
        throw InvalidArgument("component_count threshold must be nonnegative");
    }
    std::uint64_t count = 0;
    for (const Amp& a : s.amps()) {
        if (std::norm(a) > threshold) {
            ++count;
        }
    }
    return count;
}

std::vector<double> probabilities(const RegisterState& s) {
    std::vector<double> p(s.dim());
    for (std::uint64_t k = 0; k < s.dim(); ++k) {
        p[k] = std::norm(s.amps()[k]);
    }
    return p;
}

} // namespace qphase
