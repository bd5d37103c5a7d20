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

#include <optional>
#include <string>

#include "json.hpp"

#include "pvqa/ansatz.h"
#include "pvqa/circuit.h"
#include "pvqa/decomposition.h"
#include "pvqa/optimizer.h"
#include "pvqa/poisson.h"
#include "pvqa/toeplitz.h"

namespace pvqa {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
/// Accepts [re, im] or a bare number.
Complex complex_from_json(const Json &j);

Json descriptor_to_json(const OperatorDescriptor &op);
OperatorDescriptor descriptor_from_json(const Json &j);

/// [{"coeff": [re, im], "op": {...}, "paired": bool, "label": str}, ...]
Json term_list_to_json(const TermList &list);
/// Restores the terms; kind, n, dimension and target come from `shape`.
TermList term_list_from_json(const Json &terms, const TermList &shape);

/// [{"gate": name, "qubits": [...], "controls": [...], "angle": x}, ...]
Json circuit_to_json(const Circuit &circuit);

/// {"dimension", "qubits_per_axis", "boundary": {kind, alpha1..beta2}, "rhs": "uniform" | [numbers]}.
/// Throws kInvalidArgument on malformed input.
PoissonProblem problem_from_json(const Json &j);
Json problem_to_json(const PoissonProblem &problem);

/// {"n": int, "band": int (optional), "coeffs": {"offset": number | [re, im], ...}}
ToeplitzSpec toeplitz_from_json(const Json &j);
Json toeplitz_to_json(const ToeplitzSpec &spec);

/// "uniform" or a list of numbers / [re, im] pairs, normalized.
StateVector state_from_json(const Json &j, unsigned num_qubits);

/// Reads "ansatz": {"depth", "rotation", "entangler"} with num_qubits supplied.
AnsatzSpec ansatz_from_json(const Json &j, unsigned num_qubits);
/// Reads "optimizer": {"method", "max_iters", "restarts", "tolerance", "patience", "step"}.
OptimizerConfig optimizer_from_json(const Json &j);

/// "exact" or a positive shot count.
EstimationMode mode_from_string(const std::string &text, std::uint64_t seed);
std::string mode_to_string(const EstimationMode &mode);

}  // namespace pvqa
