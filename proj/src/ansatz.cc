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

#include "pvqa/ansatz.h"

#include <string>

#include "pvqa/error.h"

namespace pvqa {

std::string_view rotation_name(Rotation r) {
    return r == Rotation::kRyOnly ? "ry-only" : "rz-ry-rz";
}

std::string_view entangler_name(Entangler e) {
    return e == Entangler::kCnotChain ? "cnot-chain" : "cz-chain";
}

Rotation rotation_from_name(std::string_view name) {
    if (name == "ry-only" || name == "ry") {
        return Rotation::kRyOnly;
    }
    if (name == "rz-ry-rz") {
        return Rotation::kRzRyRz;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown rotation '" + std::string(name) + "'");
}

Entangler entangler_from_name(std::string_view name) {
    if (name == "cnot-chain" || name == "cnot") {
        return Entangler::kCnotChain;
    }
    if (name == "cz-chain" || name == "cz") {
        return Entangler::kCzChain;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown entangler '" + std::string(name) + "'");
}

std::size_t AnsatzSpec::parameter_count() const {
    return static_cast<std::size_t>(num_qubits) * depth * (rotation == Rotation::kRyOnly ? 1 : 3);
}

void AnsatzSpec::validate() const {
    if (num_qubits < 1 || depth < 1) {
        throw Error(ErrorCode::kInvalidArgument, "ansatz needs at least one qubit and one layer");
    }
}

Circuit ansatz_circuit(const AnsatzSpec &spec, const Parameters &params) {
    spec.validate();
    if (params.size() != spec.parameter_count()) {
        throw Error(ErrorCode::kLengthMismatch, "ansatz expects " + std::to_string(spec.parameter_count()) +
                                                    " parameters, got " + std::to_string(params.size()));
    }
    Circuit c(spec.num_qubits);
    std::size_t k = 0;
    for (unsigned layer = 0; layer < spec.depth; layer++) {
        for (unsigned q = 0; q < spec.num_qubits; q++) {
            if (spec.rotation == Rotation::kRyOnly) {
                c.add(Gate::ry(q, params[k++]));
            } else {
                c.add(Gate::rz(q, params[k++]));
                c.add(Gate::ry(q, params[k++]));
                c.add(Gate::rz(q, params[k++]));
            }
        }
        for (unsigned q = 0; q + 1 < spec.num_qubits; q++) {
            c.add(spec.entangler == Entangler::kCnotChain ? Gate::cnot(q, q + 1) : Gate::cz(q, q + 1));
        }
    }
    return c;
}

StateVector ansatz_state(const AnsatzSpec &spec, const Parameters &params) {
    const Circuit c = ansatz_circuit(spec, params);
    return run_statevector(c, StateVector(spec.num_qubits));
}

}  // namespace pvqa
