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

#include <string_view>
#include <vector>

#include "pvqa/circuit.h"

namespace pvqa {

enum class Rotation { kRyOnly, kRzRyRz };
enum class Entangler { kCnotChain, kCzChain };

std::string_view rotation_name(Rotation r);
std::string_view entangler_name(Entangler e);
Rotation rotation_from_name(std::string_view name);
Entangler entangler_from_name(std::string_view name);

struct AnsatzSpec {
    unsigned num_qubits = 1;
    unsigned depth = 1;
    Rotation rotation = Rotation::kRyOnly;
    Entangler entangler = Entangler::kCnotChain;

    std::size_t parameter_count() const;
    void validate() const;
};

using Parameters = std::vector<double>;

/// depth layers of (rotation on every qubit, then the nearest-neighbour chain
/// q -> q+1). Parameters are ordered layer, qubit, then rotation slot.
Circuit ansatz_circuit(const AnsatzSpec &spec, const Parameters &params);

StateVector ansatz_state(const AnsatzSpec &spec, const Parameters &params);

}  // namespace pvqa
