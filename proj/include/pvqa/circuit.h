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

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pvqa/decomposition.h"
#include "pvqa/linalg.h"
#include "pvqa/toeplitz.h"

namespace pvqa {

enum class GateKind { kH, kX, kZ, kS, kSdg, kRy, kRz, kPhase, kCnot, kCz, kSwap, kBlock };

/// One gate. `qubits` holds the operands: {target} for single-qubit gates,
/// {control, target} for kCnot/kCz, {a, b} for kSwap, and the block's qubits
/// (least significant first) for kBlock. `controls` are extra control qubits
/// added by Circuit::controlled; the gate fires only when all are |1>.
struct Gate {
    GateKind kind = GateKind::kH;
    std::vector<unsigned> qubits;
    std::vector<unsigned> controls;
    double angle = 0.0;
    std::shared_ptr<const DenseMatrix> block;

    static Gate h(unsigned q);
    static Gate x(unsigned q);
    static Gate z(unsigned q);
    static Gate s(unsigned q);
    static Gate sdg(unsigned q);
    static Gate ry(unsigned q, double angle);
    static Gate rz(unsigned q, double angle);
    static Gate phase(unsigned q, double angle);
    static Gate cnot(unsigned control, unsigned target);
    static Gate cz(unsigned control, unsigned target);
    static Gate swap(unsigned a, unsigned b);
    /// Throws kNonUnitaryBlock unless `u` is unitary to 1e-12.
    static Gate unitary_block(std::vector<unsigned> qubits, DenseMatrix u);

    Gate inverse() const;
    std::string name() const;
    bool operator==(const Gate &other) const;
};

class Circuit {
   public:
    explicit Circuit(unsigned num_qubits = 0) : num_qubits_(num_qubits) {
    }

    unsigned num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    bool empty() const noexcept {
        return gates_.empty();
    }

    /// Validates operands (distinct, in range) and appends.
    Circuit &add(Gate gate);
    /// Appends `other` with every qubit index shifted by `offset`.
    Circuit &append(const Circuit &other, unsigned offset = 0);

    Circuit inverse() const;
    /// Every gate additionally conditioned on `control`. The result spans at
    /// least control + 1 qubits; `control` must not already be an operand.
    Circuit controlled(unsigned control) const;
    /// Same gates on a wider register.
    Circuit widened(unsigned num_qubits) const;

    std::size_t count(GateKind kind) const;
    DenseMatrix to_dense() const;

    bool operator==(const Circuit &other) const = default;

   private:
    unsigned num_qubits_;
    std::vector<Gate> gates_;
};

/// Applies the gates in order. The initial state must span exactly the
/// circuit's qubits.
StateVector run_statevector(const Circuit &circuit, const StateVector &initial);
void apply_gate(const Gate &gate, std::span<Complex> amplitudes);

/// Forward DFT on q qubits: H, controlled phases, then bit-reversal swaps, so
/// to_dense() equals dft_matrix(2^q) with qubit 0 least significant.
Circuit qft_circuit(unsigned num_qubits);
Circuit inverse_qft_circuit(unsigned num_qubits);

/// One Phase(l theta_j) per qubit with a non-zero phase.
Circuit phase_tower_circuit(const PhaseSpectrum &spectrum);

/// L^l on log2(n) qubits via F^{-1} D^l F.
Circuit shift_circuit(std::size_t n, long power);

/// |0><0| (x) I + |1><1| (x) L^l with the ancilla at qubit log2(n). Only the
/// phase tower needs the control since F^{-1} F cancels when it is off.
Circuit controlled_Ll_circuit(std::size_t n, long power);

/// Circuit with U|0...0> = state: H on every qubit for the uniform state,
/// otherwise an exact initialisation block.
Circuit state_preparation_circuit(const StateVector &state);

struct ExactMode {};
struct ShotMode {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};
using EstimationMode = std::variant<ExactMode, ShotMode>;

bool is_exact(const EstimationMode &mode);
/// The same mode with a seed derived for sub-stream `stream` (exact stays exact).
EstimationMode derive_mode(const EstimationMode &mode, std::uint64_t stream);
/// SplitMix64 of (master, stream): independent, reproducible per-call seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

enum class BracketPart { kReal, kImag };

/// Estimates Re or Im of <0|left^dagger U right|0> where U = `controlled`
/// with its control on the ancilla at qubit n_system. When left == right the
/// preparation runs once uncontrolled; otherwise both preparations are
/// controlled. Imaginary parts use an S^dagger on the ancilla. Shot mode
/// returns (k0 - k1) / shots.
double hadamard_test(unsigned n_system, const Circuit &controlled, const Circuit &prep_left,
                     const Circuit &prep_right, BracketPart part, const EstimationMode &mode);

/// Both parts (streams 0 and 1 of the mode's seed).
Complex hadamard_bracket(unsigned n_system, const Circuit &controlled, const Circuit &prep_left,
                         const Circuit &prep_right, const EstimationMode &mode);

struct SignedCircuit {
    Circuit prep;
    int sign = 1;
};

/// Preparations G_k and signs s_k with M = sum_k s_k G_k|0><0|G_k^dagger, so
/// <psi|M|psi> = sum_k s_k |<0|G_k^dagger|psi>|^2.
std::vector<SignedCircuit> bell_pair_circuits(const ProjectorPair &pair, unsigned num_qubits);

/// Probability of reading all zeros after running psi_prep then prep^dagger.
double zero_string_probability(const Circuit &psi_prep, const Circuit &prep, const EstimationMode &mode);

/// <psi|M|psi> through bell_pair_circuits.
double bell_expectation(const ProjectorPair &pair, unsigned num_qubits, const Circuit &psi_prep,
                        const EstimationMode &mode);

/// G (I - 2|0><0|) G^dagger as gates on the register.
Circuit reflection_circuit(const Circuit &prep);

struct ShotResult {
    /// Bitstrings with the highest qubit first.
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Multinomial sample of the output distribution, deterministic in seed.
ShotResult sample_shots(const Circuit &circuit, const StateVector &initial, std::uint64_t shots,
                        std::uint64_t seed);

}  // namespace pvqa
