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

#include "pvqa/cost.h"

#include <cmath>

#include "pvqa/error.h"

namespace pvqa {

OperatorDecomposition decompose_problem(const PoissonProblem &problem) {
    problem.validate();
    const std::size_t n = problem.grid_size();
    if (problem.dimension > 1) {
        return {decompose_dirichlet_dd(problem.dimension, n), decompose_dirichlet_dd_squared(problem.dimension, n)};
    }
    if (problem.boundary.kind == BoundaryKind::kUnified) {
        const auto cd = boundary_coefficients(problem.boundary, n);
        return decompose_unified_1d(n, cd.c, cd.d);
    }
    return decompose_dirichlet_1d(n);
}

OperatorDecomposition decompose_toeplitz_system(const ToeplitzSpec &spec) {
    return {decompose_toeplitz(spec), decompose_toeplitz_gram(spec)};
}

CostReport cost_from_lists(const OperatorDecomposition &lists, const Circuit &b_prep, const Circuit &psi_prep,
                           const EstimationMode &mode) {
    CostReport r;
    r.a_terms = estimate_transition(lists.a, b_prep, psi_prep, derive_mode(mode, 0));
    r.a_squared_terms = estimate_expectation(lists.a_squared, psi_prep, derive_mode(mode, 1));
    r.a_bracket = r.a_terms.value;
    r.a_squared = r.a_squared_terms.value.real();
    r.cost = r.a_squared - std::norm(r.a_bracket);
    r.circuits = r.a_terms.circuits + r.a_squared_terms.circuits;
    return r;
}

CostReport cost_linear_system(const PoissonProblem &problem, const OperatorDecomposition &lists,
                              const AnsatzSpec &ansatz, const Parameters &params, const EstimationMode &mode) {
    if (ansatz.num_qubits != problem.total_qubits()) {
        throw Error(ErrorCode::kDimensionMismatch, "ansatz width differs from the problem register");
    }
    const Circuit b_prep = state_preparation_circuit(prepare_b(problem));
    return cost_from_lists(lists, b_prep, ansatz_circuit(ansatz, params), mode);
}

CostReport cost_toeplitz_system(const ToeplitzSpec &spec, const Circuit &b_prep, const AnsatzSpec &ansatz,
                                const Parameters &params, const EstimationMode &mode) {
    return cost_from_lists(decompose_toeplitz_system(spec), b_prep, ansatz_circuit(ansatz, params), mode);
}

double matvec_image_norm(const ToeplitzSpec &spec, const StateVector &v0) {
    const auto image = classical_toeplitz_matvec(spec, v0.amplitudes());
    double norm2 = 0.0;
    for (Complex z : image) {
        norm2 += std::norm(z);
    }
    const double norm = std::sqrt(norm2);
    if (norm <= 1e-12) {
        throw Error(ErrorCode::kZeroImage, "T v0 vanishes; the matrix-vector target is undefined");
    }
    return norm;
}

MatvecReport cost_matvec(const ToeplitzSpec &spec, const StateVector &v0, const AnsatzSpec &ansatz,
                         const Parameters &params, const EstimationMode &mode) {
    MatvecReport r;
    r.image_norm = matvec_image_norm(spec, v0);
    const TermList list = decompose_toeplitz(spec);
    const auto est = estimate_transition(list, ansatz_circuit(ansatz, params), state_preparation_circuit(v0), mode);
    r.overlap = est.value;
    r.circuits = est.circuits;
    r.cost = 1.0 - std::norm(r.overlap) / (r.image_norm * r.image_norm);
    return r;
}

double dense_system_cost(const DenseMatrix &a, const StateVector &b, const StateVector &psi) {
    const auto apsi = a.apply(psi.amplitudes());
    double norm2 = 0.0;
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < apsi.size(); i++) {
        norm2 += std::norm(apsi[i]);
        overlap += std::conj(b[i]) * apsi[i];
    }
    return norm2 - std::norm(overlap);
}

double dense_matvec_cost(const DenseMatrix &t, const StateVector &v0, const StateVector &psi) {
    const auto image = t.apply(v0.amplitudes());
    double norm2 = 0.0;
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < image.size(); i++) {
        norm2 += std::norm(image[i]);
        overlap += std::conj(psi[i]) * image[i];
    }
    if (std::sqrt(norm2) <= 1e-12) {
        throw Error(ErrorCode::kZeroImage, "T v0 vanishes; the matrix-vector target is undefined");
    }
    return 1.0 - std::norm(overlap) / norm2;
}

StateVector solution_state(const PoissonProblem &problem) {
    const DenseMatrix a = build_poisson_matrix(problem);
    const StateVector b = prepare_b(problem);
    return normalize(dense_solve(a, b.amplitudes()));
}

double solution_fidelity(const PoissonProblem &problem, const AnsatzSpec &ansatz, const Parameters &params) {
    return fidelity(solution_state(problem), ansatz_state(ansatz, params));
}

}  // namespace pvqa
