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

#include <gtest/gtest.h>

#include "pvqa/error.h"
#include "pvqa/linalg.h"
#include "reference.h"

using namespace pvqa;
using namespace pvqa::testing;

TEST(linalg, dft_matches_closed_form) {
    for (std::size_t n : {1, 2, 4, 8, 16}) {
        EXPECT_LT(diff(dft_matrix(n), dft_ref(n)), 1e-14) << n;
        EXPECT_TRUE(is_unitary(dft_matrix(n)));
    }
}

TEST(linalg, dft_diagonalizes_down_shift) {
    // F^{-1} diag(omega^j) F = L, checked against index-built matrices.
    for (std::size_t n : {2, 4, 8}) {
        Mat d = zeros(n, n);
        for (std::size_t j = 0; j < n; j++) {
            d[j][j] = std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(n));
        }
        const Mat f = dft_ref(n);
        const Mat l = mul(mul(dagger(f), d), f);
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = 0; j < n; j++) EXPECT_NEAR(std::abs(l[i][j] - shift_ref(n, 1)[i][j]), 0.0, 1e-12);
    }
}

TEST(linalg, unit_circulants) {
    EXPECT_LT(diff(build_unit_circulant(8, ShiftDirection::kDown), shift_ref(8, 1)), 0.0 + 1e-15);
    EXPECT_LT(diff(build_unit_circulant(8, ShiftDirection::kUp), shift_ref(8, -1)), 1e-15);
    const auto l = build_unit_circulant(4, ShiftDirection::kDown);
    EXPECT_EQ(l * build_unit_circulant(4, ShiftDirection::kUp), DenseMatrix::identity(4));
    EXPECT_EQ(matrix_power(l, 4), DenseMatrix::identity(4));
}

TEST(linalg, kron_matches_reference) {
    std::mt19937_64 rng(3);
    const auto a0 = random_state(4, rng), b0 = random_state(6, rng);
    const DenseMatrix a(2, 2, a0), b(2, 3, b0);
    const Mat ar = {{a0[0], a0[1]}, {a0[2], a0[3]}};
    const Mat br = {{b0[0], b0[1], b0[2]}, {b0[3], b0[4], b0[5]}};
    EXPECT_LT(diff(kron(a, b), kron_ref(ar, br)), 1e-15);
}

TEST(linalg, dense_solve_recovers_known_solution) {
    // A' x = e: x_i = (i+1)(n-i)/2 for the second-difference operator.
    const std::size_t n = 8;
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; i++) {
        a(i, i) = 2.0;
        if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1.0;
    }
    const std::vector<Complex> ones(n, 1.0);
    const auto x = dense_solve(a, ones);
    for (std::size_t i = 0; i < n; i++) {
        EXPECT_NEAR(x[i].real(), double((i + 1) * (n - i)) / 2.0, 1e-12);
    }
}

TEST(linalg, dense_solve_rejects_singular) {
    DenseMatrix a(2, 2, {1.0, 2.0, 2.0, 4.0});
    const std::vector<Complex> b{1.0, 1.0};
    try {
        dense_solve(a, b);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
    }
}

TEST(linalg, dense_cap) {
    EXPECT_THROW(DenseMatrix::identity(kMaxDenseDim + 1), Error);
    EXPECT_NO_THROW(DenseMatrix(kMaxDenseDim, 1));
}

TEST(linalg, state_vector_basics) {
    const StateVector zero(3);
    EXPECT_EQ(zero.dimension(), 8u);
    EXPECT_EQ(zero[0], Complex(1.0));
    const StateVector u = StateVector::uniform(2);
    for (std::size_t i = 0; i < 4; i++) EXPECT_NEAR(u[i].real(), 0.5, 1e-15);
    EXPECT_NEAR(fidelity(u, StateVector::basis(2, 3)), 0.5, 1e-15);
    EXPECT_NEAR(fidelity(StateVector::basis(2, 1), StateVector::basis(2, 2)), 0.0, 0.0);
    const auto e = u.embedded_with_zero_msb();
    EXPECT_EQ(e.num_qubits(), 3u);
    EXPECT_EQ(e[5], Complex(0.0));
    EXPECT_NEAR(e[3].real(), 0.5, 1e-15);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), Error);
}

TEST(linalg, normalize_errors) {
    const std::vector<Complex> z(4, 0.0);
    try {
        normalize(z);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kZeroVector);
    }
    const std::vector<Complex> v{3.0, 4.0};
    const auto s = normalize(v);
    EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
    EXPECT_THROW(fidelity(StateVector(1), StateVector(2)), Error);
}

TEST(linalg, powers_of_two) {
    EXPECT_TRUE(is_power_of_two(1));
    EXPECT_TRUE(is_power_of_two(64));
    EXPECT_FALSE(is_power_of_two(6));
    EXPECT_FALSE(is_power_of_two(0));
    EXPECT_EQ(log2_exact(32), 5u);
    EXPECT_THROW(log2_exact(12), Error);
}
