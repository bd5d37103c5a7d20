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

#include <cstddef>
#include <string>
#include <vector>

#include "pvqa/circuit.h"
#include "pvqa/decomposition.h"

namespace pvqa {

/// Gate-level realization of a site letter on log2(n) qubits.
Circuit letter_circuit(Letter letter, std::size_t n);

/// Letter circuit conditioned on an ancilla at qubit log2(n). Shift factors
/// only control their phase tower; the surrounding QFT pair cancels when the
/// ancilla is off.
Circuit controlled_letter_circuit(Letter letter, std::size_t n);

/// Controlled tensor word on dimension * log2(n) system qubits with the
/// ancilla directly above them.
Circuit controlled_word_circuit(const TensorWord &word, std::size_t n, unsigned dimension);

/// One term's share of a bracket sum.
struct TermEstimate {
    std::string label;
    Complex coefficient;
    /// <left|O|right> for transition lists, <psi|O|psi> for expectation lists.
    Complex bracket;
    /// What the term adds to the list's value, adjoint partner included.
    Complex contribution;
    /// Circuits executed for this term.
    std::size_t circuits = 0;
};

struct ListEstimate {
    Complex value;
    std::vector<TermEstimate> terms;
    std::size_t circuits = 0;
};

/// sum_k c_k <left|O_k|right> with every bracket taken from a circuit.
/// Both preparations act on the list's full register.
ListEstimate estimate_transition(const TermList &list, const Circuit &left_prep, const Circuit &right_prep,
                                 const EstimationMode &mode);

/// sum_k c_k <psi|O_k|psi>.
ListEstimate estimate_expectation(const TermList &list, const Circuit &psi_prep, const EstimationMode &mode);

/// Dispatches on list.kind. For expectation lists only `right_prep` is used.
ListEstimate estimate_term_list(const TermList &list, const Circuit &left_prep, const Circuit &right_prep,
                                const EstimationMode &mode);

/// Register width the list's operators act on.
unsigned term_list_qubits(const TermList &list);

}  // namespace pvqa
