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

#include "pvqa/poisson.h"

#include <algorithm>
#include <string>

#include "pvqa/error.h"

namespace pvqa {

BoundaryCondition BoundaryCondition::unified(double alpha1, double alpha2, double beta1, double beta2) {
    if (!(alpha1 > 0 && alpha2 > 0 && beta1 > 0 && beta2 > 0)) {
        throw Error(ErrorCode::kInvalidArgument, "unified boundary parameters must all be positive");
    }
    return {BoundaryKind::kUnified, alpha1, alpha2, beta1, beta2};
}

std::size_t PoissonProblem::total_size() const {
    if (total_qubits() >= 8 * sizeof(std::size_t) - 1) {
        throw Error(ErrorCode::kDimensionOverflow, "problem size overflows the index type");
    }
    return std::size_t{1} << total_qubits();
}

void PoissonProblem::validate() const {
    if (dimension < 1) {
        throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
    }
    if (qubits_per_axis < 1) {
        throw Error(ErrorCode::kInvalidArgument, "qubits_per_axis must be >= 1");
    }
    if (boundary.kind == BoundaryKind::kUnified) {
        if (dimension != 1) {
            throw Error(ErrorCode::kUnsupportedProblem,
                        "unified boundary conditions are only defined for dimension 1");
        }
        BoundaryCondition::unified(boundary.alpha1, boundary.alpha2, boundary.beta1, boundary.beta2);
    }
    if (!rhs.empty()) {
        if (rhs.size() != total_size()) {
            throw Error(ErrorCode::kLengthMismatch, "rhs has " + std::to_string(rhs.size()) +
                                                        " samples, expected " + std::to_string(total_size()));
        }
        if (std::all_of(rhs.begin(), rhs.end(), [](double v) { return v == 0.0; })) {
            throw Error(ErrorCode::kZeroVector, "rhs is identically zero");
        }
    }
}

BoundaryCoefficients boundary_coefficients(const BoundaryCondition &bc, std::size_t n) {
    if (bc.kind != BoundaryKind::kUnified) {
        throw Error(ErrorCode::kWrongKind, "boundary coefficients exist only for unified conditions");
    }
    const double h = 1.0 / (static_cast<double>(n) + 1.0);
    return {bc.alpha1 / (bc.alpha1 + bc.alpha2 * h), bc.beta1 / (bc.beta1 + bc.beta2 * h)};
}

DenseMatrix build_poisson_1d(std::size_t n, double c, double d) {
    if (n < 2) {
        throw Error(ErrorCode::kInvalidArgument, "grid size must be >= 2");
    }
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; i++) {
        a(i, i) = 2.0;
        if (i + 1 < n) {
            a(i, i + 1) = -1.0;
            a(i + 1, i) = -1.0;
        }
    }
    a(0, 0) -= c;
    a(n - 1, n - 1) -= d;
    return a;
}

DenseMatrix build_poisson_1d(const PoissonProblem &problem) {
    problem.validate();
    if (problem.dimension != 1) {
        throw Error(ErrorCode::kUnsupportedProblem, "build_poisson_1d needs dimension 1");
    }
    const std::size_t n = problem.grid_size();
    if (problem.boundary.kind == BoundaryKind::kDirichlet) {
        return build_poisson_1d(n, 0.0, 0.0);
    }
    const auto [c, d] = boundary_coefficients(problem.boundary, n);
    return build_poisson_1d(n, c, d);
}

DenseMatrix build_poisson_dd(const PoissonProblem &problem) {
    problem.validate();
    if (problem.boundary.kind != BoundaryKind::kDirichlet) {
        throw Error(ErrorCode::kUnsupportedProblem, "build_poisson_dd needs Dirichlet conditions");
    }
    if (problem.total_size() > kMaxDenseDim) {
        throw Error(ErrorCode::kDimensionOverflow,
                    "n^d = " + std::to_string(problem.total_size()) + " exceeds the dense oracle cap");
    }
    const std::size_t n = problem.grid_size();
    const DenseMatrix a1 = build_poisson_1d(n, 0.0, 0.0);
    const DenseMatrix eye = DenseMatrix::identity(n);
    DenseMatrix total(problem.total_size(), problem.total_size());
    for (unsigned site = 0; site < problem.dimension; site++) {
        DenseMatrix term = (site == 0) ? a1 : eye;
        for (unsigned k = 1; k < problem.dimension; k++) {
            term = kron(term, k == site ? a1 : eye);
        }
        total += term;
    }
    return total;
}

DenseMatrix build_poisson_matrix(const PoissonProblem &problem) {
    return problem.dimension == 1 ? build_poisson_1d(problem) : build_poisson_dd(problem);
}

StateVector prepare_b(const PoissonProblem &problem) {
    problem.validate();
    if (problem.uniform_rhs()) {
        return StateVector::uniform(problem.total_qubits());
    }
    return normalize(to_complex(problem.rhs));
}

}  // namespace pvqa
