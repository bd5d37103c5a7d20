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
#include <utility>
#include <vector>

#include "pvqa/linalg.h"

namespace pvqa {

enum class BoundaryKind { kDirichlet, kUnified };

/// Dirichlet (mu = 0 on the boundary) or the unified Robin-type pair
/// alpha1 mu'(0) - alpha2 mu(0) = 0, beta1 mu'(1) - beta2 mu(1) = 0.
struct BoundaryCondition {
    BoundaryKind kind = BoundaryKind::kDirichlet;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;

    static BoundaryCondition dirichlet() {
        return {};
    }
    static BoundaryCondition unified(double alpha1, double alpha2, double beta1, double beta2);
};

struct PoissonProblem {
    unsigned dimension = 1;
    unsigned qubits_per_axis = 1;
    BoundaryCondition boundary;
    /// Sampled right-hand side of length n^d; empty means the uniform token.
    std::vector<double> rhs;

    std::size_t grid_size() const noexcept {
        return std::size_t{1} << qubits_per_axis;
    }
    std::size_t total_size() const;
    unsigned total_qubits() const noexcept {
        return dimension * qubits_per_axis;
    }
    bool uniform_rhs() const noexcept {
        return rhs.empty();
    }

    /// Checks every structural invariant; throws on the first violation.
    void validate() const;
};

/// Corner perturbations of the unified boundary operator.
struct BoundaryCoefficients {
    double c = 0.0;
    double d = 0.0;
};

/// c = a1/(a1 + a2 h), d = b1/(b1 + b2 h) with h = 1/(n+1).
BoundaryCoefficients boundary_coefficients(const BoundaryCondition &bc, std::size_t n);

/// Tridiagonal [-1, 2, -1] with corners 2-c and 2-d (2 and 2 for Dirichlet).
DenseMatrix build_poisson_1d(const PoissonProblem &problem);
/// Same matrix from explicit corner coefficients.
DenseMatrix build_poisson_1d(std::size_t n, double c, double d);
/// Kronecker sum of `dimension` copies of the Dirichlet operator.
DenseMatrix build_poisson_dd(const PoissonProblem &problem);
/// Whichever of the two applies to the problem.
DenseMatrix build_poisson_matrix(const PoissonProblem &problem);

/// Normalised |b> over dimension * qubits_per_axis qubits.
StateVector prepare_b(const PoissonProblem &problem);

}  // namespace pvqa
