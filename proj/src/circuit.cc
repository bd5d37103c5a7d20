// Copyright 2026 The pvqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pvqa/circuit.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "pvqa/error.h"

namespace pvqa {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major 2x2

constexpr double kInvSqrt2 = 0.70710678118654752440;

Mat2 single_qubit_matrix(const Gate &g) {
    const Complex i{0.0, 1.0};
    switch (g.kind) {
        case GateKind::kH:
            return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateKind::kX:
        case GateKind::kCnot:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::kZ:
        case GateKind::kCz:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::kS:
            return {1.0, 0.0, 0.0, i};
        case GateKind::kSdg:
            return {1.0, 0.0, 0.0, -i};
        case GateKind::kRy: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            return {c, -s, s, c};
        }
        case GateKind::kRz:
            return {std::polar(1.0, -g.angle / 2), 0.0, 0.0, std::polar(1.0, g.angle / 2)};
        case GateKind::kPhase:
            return {1.0, 0.0, 0.0, std::polar(1.0, g.angle)};
        default:
            throw Error(ErrorCode::kInvalidArgument, "not a single-qubit gate");
    }
}

std::size_t mask_of(std::span<const unsigned> qubits) {
    std::size_t m = 0;
    for (unsigned q : qubits) {
        m |= std::size_t{1} << q;
    }
    return m;
}

void apply_single(const Mat2 &m, unsigned target, std::size_t control_mask, std::span<Complex> amps) {
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); i++) {
        if ((i & tbit) || (i & control_mask) != control_mask) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | tbit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | tbit] = m[2] * a0 + m[3] * a1;
    }
}

void apply_block(const Gate &g, std::size_t control_mask, std::span<Complex> amps) {
    const auto &u = *g.block;
    const std::size_t k = g.qubits.size();
    const std::size_t dim = std::size_t{1} << k;
    const std::size_t target_mask = mask_of(g.qubits);
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t local = 0; local < dim; local++) {
        for (std::size_t b = 0; b < k; b++) {
            if ((local >> b) & 1) {
                offsets[local] |= std::size_t{1} << g.qubits[b];
            }
        }
    }
    std::vector<Complex> in(dim), out(dim);
    for (std::size_t base = 0; base < amps.size(); base++) {
        if ((base & target_mask) || (base & control_mask) != control_mask) {
            continue;
        }
        for (std::size_t l = 0; l < dim; l++) {
            in[l] = amps[base | offsets[l]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < dim; c++) {
                acc += u(r, c) * in[c];
            }
            out[r] = acc;
        }
        for (std::size_t l = 0; l < dim; l++) {
            amps[base | offsets[l]] = out[l];
        }
    }
}

std::vector<unsigned> operands(const Gate &g) {
    std::vector<unsigned> all = g.qubits;
    all.insert(all.end(), g.controls.begin(), g.controls.end());
    return all;
}

std::size_t expected_arity(GateKind kind) {
    switch (kind) {
        case GateKind::kCnot:
        case GateKind::kCz:
        case GateKind::kSwap:
            return 2;
        case GateKind::kBlock:
            return 0;
        default:
            return 1;
    }
}

double sample_fraction(double p, const ShotMode &shots) {
    if (shots.shots == 0) {
        throw Error(ErrorCode::kShotCountZero, "shot mode needs at least one shot");
    }
    std::mt19937_64 rng(shots.seed);
    std::binomial_distribution<std::uint64_t> draw(shots.shots, std::clamp(p, 0.0, 1.0));
    return static_cast<double>(draw(rng)) / static_cast<double>(shots.shots);
}

Gate make_gate(GateKind kind, std::vector<unsigned> qubits, double angle = 0.0) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.angle = angle;
    return g;
}

}  // namespace

Gate Gate::h(unsigned q) {
    return make_gate(GateKind::kH, {q});
}
Gate Gate::x(unsigned q) {
    return make_gate(GateKind::kX, {q});
}
Gate Gate::z(unsigned q) {
    return make_gate(GateKind::kZ, {q});
}
Gate Gate::s(unsigned q) {
    return make_gate(GateKind::kS, {q});
}
Gate Gate::sdg(unsigned q) {
    return make_gate(GateKind::kSdg, {q});
}
Gate Gate::ry(unsigned q, double angle) {
    return make_gate(GateKind::kRy, {q}, angle);
}
Gate Gate::rz(unsigned q, double angle) {
    return make_gate(GateKind::kRz, {q}, angle);
}
Gate Gate::phase(unsigned q, double angle) {
    return make_gate(GateKind::kPhase, {q}, angle);
}
Gate Gate::cnot(unsigned control, unsigned target) {
    return make_gate(GateKind::kCnot, {control, target});
}
Gate Gate::cz(unsigned control, unsigned target) {
    return make_gate(GateKind::kCz, {control, target});
}
Gate Gate::swap(unsigned a, unsigned b) {
    return make_gate(GateKind::kSwap, {a, b});
}

Gate Gate::unitary_block(std::vector<unsigned> qubits, DenseMatrix u) {
    if (u.rows() != (std::size_t{1} << qubits.size()) || !is_unitary(u, 1e-12)) {
        throw Error(ErrorCode::kNonUnitaryBlock, "block matrix is not a unitary on its qubits");
    }
    Gate g = make_gate(GateKind::kBlock, std::move(qubits));
    g.block = std::make_shared<const DenseMatrix>(std::move(u));
    return g;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::kS:
            g.kind = GateKind::kSdg;
            break;
        case GateKind::kSdg:
            g.kind = GateKind::kS;
            break;
        case GateKind::kRy:
        case GateKind::kRz:
        case GateKind::kPhase:
            g.angle = -angle;
            break;
        case GateKind::kBlock:
            g.block = std::make_shared<const DenseMatrix>(block->adjoint());
            break;
        default:
            break;
    }
    return g;
}

std::string Gate::name() const {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kX:
            return "X";
        case GateKind::kZ:
            return "Z";
        case GateKind::kS:
            return "S";
        case GateKind::kSdg:
            return "Sdg";
        case GateKind::kRy:
            return "Ry";
        case GateKind::kRz:
            return "Rz";
        case GateKind::kPhase:
            return "Phase";
        case GateKind::kCnot:
            return "CNOT";
        case GateKind::kCz:
            return "CZ";
        case GateKind::kSwap:
            return "SWAP";
        case GateKind::kBlock:
            return "Block";
    }
    return "?";
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || qubits != other.qubits || controls != other.controls || angle != other.angle) {
        return false;
    }
    if (kind != GateKind::kBlock) {
        return true;
    }
    return block == other.block || (block && other.block && *block == *other.block);
}

Circuit &Circuit::add(Gate gate) {
    const std::size_t arity = expected_arity(gate.kind);
    if (arity != 0 && gate.qubits.size() != arity) {
        throw Error(ErrorCode::kInvalidArgument, gate.name() + " has the wrong number of operands");
    }
    if (gate.kind == GateKind::kBlock && (!gate.block || gate.qubits.empty())) {
        throw Error(ErrorCode::kInvalidArgument, "block gate without qubits or matrix");
    }
    auto all = operands(gate);
    for (unsigned q : all) {
        if (q >= num_qubits_) {
            throw Error(ErrorCode::kInvalidArgument, gate.name() + " acts on qubit " + std::to_string(q) +
                                                         " of a " + std::to_string(num_qubits_) +
                                                         "-qubit circuit");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Error(ErrorCode::kInvalidArgument, gate.name() + " repeats a qubit");
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other, unsigned offset) {
    for (Gate g : other.gates_) {
        for (auto &q : g.qubits) {
            q += offset;
        }
        for (auto &q : g.controls) {
            q += offset;
        }
        add(std::move(g));
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

Circuit Circuit::controlled(unsigned control) const {
    Circuit out(std::max(num_qubits_, control + 1));
    for (Gate g : gates_) {
        g.controls.push_back(control);
        out.add(std::move(g));
    }
    return out;
}

Circuit Circuit::widened(unsigned num_qubits) const {
    if (num_qubits < num_qubits_) {
        throw Error(ErrorCode::kInvalidArgument, "cannot narrow a circuit");
    }
    Circuit out(num_qubits);
    out.gates_ = gates_;
    return out;
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [&](const Gate &g) { return g.kind == kind; }));
}

DenseMatrix Circuit::to_dense() const {
    const std::size_t dim = std::size_t{1} << num_qubits_;
    DenseMatrix out(dim, dim);
    for (std::size_t col = 0; col < dim; col++) {
        const StateVector s = run_statevector(*this, StateVector::basis(num_qubits_, col));
        for (std::size_t row = 0; row < dim; row++) {
            out(row, col) = s[row];
        }
    }
    return out;
}

void apply_gate(const Gate &gate, std::span<Complex> amps) {
    const std::size_t controls = mask_of(gate.controls);
    switch (gate.kind) {
        case GateKind::kCnot:
        case GateKind::kCz:
            apply_single(single_qubit_matrix(gate), gate.qubits[1],
                         controls | (std::size_t{1} << gate.qubits[0]), amps);
            return;
        case GateKind::kSwap: {
            const std::size_t a = std::size_t{1} << gate.qubits[0];
            const std::size_t b = std::size_t{1} << gate.qubits[1];
            for (std::size_t i = 0; i < amps.size(); i++) {
                if ((i & a) && !(i & b) && (i & controls) == controls) {
                    std::swap(amps[i], amps[i ^ a ^ b]);
                }
            }
            return;
        }
        case GateKind::kBlock:
            apply_block(gate, controls, amps);
            return;
        default:
            apply_single(single_qubit_matrix(gate), gate.qubits[0], controls, amps);
    }
}

StateVector run_statevector(const Circuit &circuit, const StateVector &initial) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::kDimensionMismatch, "initial state has " + std::to_string(initial.num_qubits()) +
                                                       " qubits, circuit has " +
                                                       std::to_string(circuit.num_qubits()));
    }
    StateVector state = initial;
    for (const auto &g : circuit.gates()) {
        apply_gate(g, state.mutable_amplitudes());
    }
    return state;
}

Circuit qft_circuit(unsigned num_qubits) {
    if (num_qubits < 1) {
        throw Error(ErrorCode::kInvalidArgument, "QFT needs at least one qubit");
    }
    Circuit c(num_qubits);
    for (unsigned j = num_qubits; j-- > 0;) {
        c.add(Gate::h(j));
        for (unsigned k = j; k-- > 0;) {
            Gate cp = Gate::phase(j, std::numbers::pi / static_cast<double>(std::size_t{1} << (j - k)));
            cp.controls.push_back(k);
            c.add(std::move(cp));
        }
    }
    for (unsigned i = 0; i < num_qubits / 2; i++) {
        c.add(Gate::swap(i, num_qubits - 1 - i));
    }
    return c;
}

Circuit inverse_qft_circuit(unsigned num_qubits) {
    return qft_circuit(num_qubits).inverse();
}

Circuit phase_tower_circuit(const PhaseSpectrum &spectrum) {
    Circuit c(log2_exact(spectrum.n));
    for (unsigned j = 0; j < spectrum.phases.size(); j++) {
        if (spectrum.phases[j] != 0.0) {
            c.add(Gate::phase(j, spectrum.phases[j]));
        }
    }
    return c;
}

Circuit shift_circuit(std::size_t n, long power) {
    const unsigned q = log2_exact(n);
    const Circuit tower = phase_tower_circuit(phase_spectrum(n, power));
    Circuit c(q);
    if (tower.empty()) {
        return c;
    }
    c.append(qft_circuit(q));
    c.append(tower);
    c.append(inverse_qft_circuit(q));
    return c;
}

Circuit controlled_Ll_circuit(std::size_t n, long power) {
    const unsigned q = log2_exact(n);
    const Circuit tower = phase_tower_circuit(phase_spectrum(n, power));
    Circuit c(q + 1);
    if (tower.empty()) {
        return c;
    }
    c.append(qft_circuit(q));
    c.append(tower.controlled(q));
    c.append(inverse_qft_circuit(q));
    return c;
}

Circuit state_preparation_circuit(const StateVector &state) {
    const unsigned q = state.num_qubits();
    const std::size_t dim = state.dimension();
    Circuit c(q);
    const double u = 1.0 / std::sqrt(static_cast<double>(dim));
    const auto amps = state.amplitudes();
    if (std::all_of(amps.begin(), amps.end(), [&](Complex a) { return std::abs(a - u) <= 1e-14; })) {
        for (unsigned k = 0; k < q; k++) {
            c.add(Gate::h(k));
        }
        return c;
    }
    for (std::size_t idx = 0; idx < dim; idx++) {
        if (std::abs(amps[idx] - 1.0) <= 1e-15) {
            for (unsigned k = 0; k < q; k++) {
                if ((idx >> k) & 1) {
                    c.add(Gate::x(k));
                }
            }
            return c;
        }
    }
    // Householder reflection sending |0> to the state, times the phase of amps[0].
    const double mag0 = std::abs(amps[0]);
    const Complex alpha = mag0 > 0.0 ? amps[0] / mag0 : Complex{1.0, 0.0};
    std::vector<Complex> v(dim);
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < dim; i++) {
        v[i] = (i == 0 ? 1.0 : 0.0) - amps[i] / alpha;
        vnorm2 += std::norm(v[i]);
    }
    DenseMatrix block = DenseMatrix::identity(dim);
    if (vnorm2 > 1e-30) {
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t col = 0; col < dim; col++) {
                block(r, col) -= 2.0 * v[r] * std::conj(v[col]) / vnorm2;
            }
        }
    }
    block *= alpha;
    std::vector<unsigned> qubits(q);
    for (unsigned k = 0; k < q; k++) {
        qubits[k] = k;
    }
    c.add(Gate::unitary_block(std::move(qubits), std::move(block)));
    return c;
}

bool is_exact(const EstimationMode &mode) {
    return std::holds_alternative<ExactMode>(mode);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

EstimationMode derive_mode(const EstimationMode &mode, std::uint64_t stream) {
    if (const auto *shots = std::get_if<ShotMode>(&mode)) {
        return ShotMode{shots->shots, derive_seed(shots->seed, stream)};
    }
    return mode;
}

double hadamard_test(unsigned n_system, const Circuit &controlled, const Circuit &prep_left,
                     const Circuit &prep_right, BracketPart part, const EstimationMode &mode) {
    if (const auto *shots = std::get_if<ShotMode>(&mode); shots && shots->shots == 0) {
        throw Error(ErrorCode::kShotCountZero, "shot mode needs at least one shot");
    }
    const unsigned ancilla = n_system;
    if (controlled.num_qubits() > n_system + 1 || prep_left.num_qubits() > n_system ||
        prep_right.num_qubits() > n_system) {
        throw Error(ErrorCode::kDimensionMismatch, "Hadamard-test operands exceed the register");
    }
    Circuit c(n_system + 1);
    const bool same_prep = prep_left == prep_right;
    if (same_prep) {
        c.append(prep_right);
    }
    c.add(Gate::h(ancilla));
    if (part == BracketPart::kImag) {
        c.add(Gate::sdg(ancilla));
    }
    if (!same_prep) {
        c.append(prep_right.controlled(ancilla).widened(n_system + 1));
    }
    c.append(controlled);
    if (!same_prep) {
        c.append(prep_left.inverse().controlled(ancilla).widened(n_system + 1));
    }
    c.add(Gate::h(ancilla));

    const StateVector out = run_statevector(c, StateVector(n_system + 1));
    const std::size_t abit = std::size_t{1} << ancilla;
    double p0 = 0.0;
    for (std::size_t i = 0; i < out.dimension(); i++) {
        if (!(i & abit)) {
            p0 += std::norm(out[i]);
        }
    }
    if (const auto *shots = std::get_if<ShotMode>(&mode)) {
        return 2.0 * sample_fraction(p0, *shots) - 1.0;
    }
    return 2.0 * p0 - 1.0;
}

Complex hadamard_bracket(unsigned n_system, const Circuit &controlled, const Circuit &prep_left,
                         const Circuit &prep_right, const EstimationMode &mode) {
    const double re =
        hadamard_test(n_system, controlled, prep_left, prep_right, BracketPart::kReal, derive_mode(mode, 0));
    const double im =
        hadamard_test(n_system, controlled, prep_left, prep_right, BracketPart::kImag, derive_mode(mode, 1));
    return {re, im};
}

std::vector<SignedCircuit> bell_pair_circuits(const ProjectorPair &pair, unsigned num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (pair.first >= dim || pair.second >= dim) {
        throw Error(ErrorCode::kUnsupportedPattern, "pair index outside the register");
    }
    if (pair.kind == PairKind::kDiagonal && pair.first == pair.second) {
        Circuit c(num_qubits);
        for (unsigned k = 0; k < num_qubits; k++) {
            if ((pair.first >> k) & 1) {
                c.add(Gate::x(k));
            }
        }
        return {{std::move(c), 1}};
    }
    if (pair.first == pair.second) {
        throw Error(ErrorCode::kUnsupportedPattern, "off-diagonal pair needs two distinct basis states");
    }
    std::size_t lo = pair.first, hi = pair.second;
    const std::size_t diff = lo ^ hi;
    unsigned pivot = 0;
    while (!((diff >> pivot) & 1)) {
        pivot++;
    }
    int orientation = 1;
    if ((lo >> pivot) & 1) {
        std::swap(lo, hi);
        orientation = -1;
    }
    // (|lo> + e^{i phi}|hi>)/sqrt2: [flip] H, [phase], CNOT fan-out, X^lo.
    auto build = [&](bool flip, int phase) {
        Circuit c(num_qubits);
        if (flip) {
            c.add(Gate::x(pivot));
        }
        c.add(Gate::h(pivot));
        if (phase > 0) {
            c.add(Gate::s(pivot));
        } else if (phase < 0) {
            c.add(Gate::sdg(pivot));
        }
        for (unsigned k = 0; k < num_qubits; k++) {
            if (k != pivot && ((diff >> k) & 1)) {
                c.add(Gate::cnot(pivot, k));
            }
        }
        for (unsigned k = 0; k < num_qubits; k++) {
            if ((lo >> k) & 1) {
                c.add(Gate::x(k));
            }
        }
        return c;
    };
    switch (pair.kind) {
        case PairKind::kDiagonal:
            return {{build(false, 0), 1}, {build(true, 0), 1}};
        case PairKind::kSymmetric:
            return {{build(false, 0), 1}, {build(true, 0), -1}};
        case PairKind::kAntisymmetric:
            return {{build(false, -1), orientation}, {build(false, 1), -orientation}};
    }
    throw Error(ErrorCode::kUnsupportedPattern, "unknown pair kind");
}

double zero_string_probability(const Circuit &psi_prep, const Circuit &prep, const EstimationMode &mode) {
    const unsigned q = std::max(psi_prep.num_qubits(), prep.num_qubits());
    Circuit c(q);
    c.append(psi_prep);
    c.append(prep.inverse());
    const StateVector out = run_statevector(c, StateVector(q));
    const double p = std::norm(out[0]);
    if (const auto *shots = std::get_if<ShotMode>(&mode)) {
        return sample_fraction(p, *shots);
    }
    return p;
}

double bell_expectation(const ProjectorPair &pair, unsigned num_qubits, const Circuit &psi_prep,
                        const EstimationMode &mode) {
    double total = 0.0;
    std::uint64_t stream = 0;
    for (const auto &[prep, sign] : bell_pair_circuits(pair, num_qubits)) {
        total += sign * zero_string_probability(psi_prep, prep, derive_mode(mode, stream++));
    }
    return total;
}

Circuit reflection_circuit(const Circuit &prep) {
    const unsigned q = prep.num_qubits();
    Circuit c(q);
    c.append(prep.inverse());
    for (unsigned k = 0; k < q; k++) {
        c.add(Gate::x(k));
    }
    Gate flip = Gate::z(0);
    for (unsigned k = 1; k < q; k++) {
        flip.controls.push_back(k);
    }
    c.add(std::move(flip));
    for (unsigned k = 0; k < q; k++) {
        c.add(Gate::x(k));
    }
    c.append(prep);
    return c;
}

ShotResult sample_shots(const Circuit &circuit, const StateVector &initial, std::uint64_t shots,
                        std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorCode::kShotCountZero, "sample_shots needs at least one shot");
    }
    const StateVector out = run_statevector(circuit, initial);
    ShotResult result{{}, shots, seed};
    std::mt19937_64 rng(seed);
    std::uint64_t remaining = shots;
    double mass = 1.0;
    const unsigned q = out.num_qubits();
    for (std::size_t i = 0; i < out.dimension() && remaining > 0; i++) {
        const double p = std::norm(out[i]);
        std::uint64_t k = remaining;
        if (i + 1 < out.dimension() && mass > 0.0) {
            std::binomial_distribution<std::uint64_t> draw(remaining, std::clamp(p / mass, 0.0, 1.0));
            k = draw(rng);
        }
        mass -= p;
        if (k == 0) {
            continue;
        }
        std::string bits(q, '0');
        for (unsigned b = 0; b < q; b++) {
            if ((i >> b) & 1) {
                bits[q - 1 - b] = '1';
            }
        }
        result.counts[bits] = k;
        remaining -= k;
    }
    return result;
}

}  // namespace pvqa
