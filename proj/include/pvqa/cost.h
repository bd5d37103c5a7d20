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

#include "pvqa/ansatz.h"
#include "pvqa/decomposition.h"
#include "pvqa/estimator.h"
#include "pvqa/poisson.h"
#include "pvqa/toeplitz.h"

namespace pvqa {

/// Term lists for A (transition brackets against |b>) and A^dagger A
/// (expectation brackets) of a Poisson problem.
OperatorDecomposition decompose_problem(const PoissonProblem &problem);

/// Term lists for T and T^dagger T.
OperatorDecomposition decompose_toeplitz_system(const ToeplitzSpec &spec);

struct CostReport {
    double cost = 0.0;
    /// <b|A|psi>.
    Complex a_bracket;
    /// <psi|A^dagger A|psi>.
    double a_squared = 0.0;
    ListEstimate a_terms;
    ListEstimate a_squared_terms;
    std::size_t circuits = 0;
};

/// E = <psi|A^dagger A|psi> - |<b|A|psi>|^2 from circuit-evaluated term lists.
CostReport cost_from_lists(const OperatorDecomposition &lists, const Circuit &b_prep, const Circuit &psi_prep,
                           const EstimationMode &mode);

CostReport cost_linear_system(const PoissonProblem &problem, const OperatorDecomposition &lists,
                              const AnsatzSpec &ansatz, const Parameters &params, const EstimationMode &mode);

CostReport cost_toeplitz_system(const ToeplitzSpec &spec, const Circuit &b_prep, const AnsatzSpec &ansatz,
                                const Parameters &params, const EstimationMode &mode);

struct MatvecReport {
    double cost = 0.0;
    /// <0,psi|C_T|0,v0>, before dividing by the image norm.
    Complex overlap;
    /// ||T v0||, computed classically.
    double image_norm = 0.0;
    std::size_t circuits = 0;
};

/// 1 - |<0,psi|C_T|0,v0>|^2 / ||T v0||^2. Throws kZeroImage when ||T v0|| <= 1e-12.
MatvecReport cost_matvec(const ToeplitzSpec &spec, const StateVector &v0, const AnsatzSpec &ansatz,
                         const Parameters &params, const EstimationMode &mode);

/// ||T v0|| with the kZeroImage check.
double matvec_image_norm(const ToeplitzSpec &spec, const StateVector &v0);

/// Dense <psi|A^dagger (I - |b><b|) A|psi>.
double dense_system_cost(const DenseMatrix &a, const StateVector &b, const StateVector &psi);

/// Dense 1 - |<psi|T v0>|^2 / ||T v0||^2.
double dense_matvec_cost(const DenseMatrix &t, const StateVector &v0, const StateVector &psi);

/// Normalized A^{-1} b from the dense oracle.
StateVector solution_state(const PoissonProblem &problem);

double solution_fidelity(const PoissonProblem &problem, const AnsatzSpec &ansatz, const Parameters &params);

}  // namespace pvqa
