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

#include "pvqa/circuit.h"
#include "pvqa/error.h"
#include "reference.h"

using namespace pvqa;
using namespace pvqa::testing;

namespace {

Circuit random_circuit(unsigned q, std::mt19937_64 &rng, int gates = 20) {
    std::uniform_real_distribution<double> angle(0.0, 6.0);
    std::uniform_int_distribution<unsigned> pick(0, q - 1);
    Circuit c(q);
    for (int g = 0; g < gates; g++) {
        const unsigned a = pick(rng);
        c.add(Gate::ry(a, angle(rng)));
        c.add(Gate::rz(a, angle(rng)));
        if (q > 1) {
            unsigned b = pick(rng);
            if (b == a) b = (a + 1) % q;
            c.add(Gate::cnot(a, b));
        }
    }
    return c;
}

Mat column_outer(const std::vector<Complex> &v) {
    Mat m = zeros(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); i++)
        for (std::size_t j = 0; j < v.size(); j++) m[i][j] = v[i] * std::conj(v[j]);
    return m;
}

std::vector<Complex> amps(const StateVector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

}  // namespace

TEST(circuit, single_qubit_gates) {
    const double r = 1.0 / std::sqrt(2.0);
    const double t = 0.7;
    auto one = [](Gate g) { return Circuit(1).add(std::move(g)).to_dense(); };
    EXPECT_LT(diff(one(Gate::h(0)), {{r, r}, {r, -r}}), 1e-15);
    EXPECT_LT(diff(one(Gate::x(0)), {{0, 1}, {1, 0}}), 1e-15);
    EXPECT_LT(diff(one(Gate::s(0)), {{1, 0}, {0, Complex(0, 1)}}), 1e-15);
    EXPECT_LT(diff(one(Gate::sdg(0)), {{1, 0}, {0, Complex(0, -1)}}), 1e-15);
    EXPECT_LT(diff(one(Gate::ry(0, t)), {{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}}),
              1e-15);
    EXPECT_LT(diff(one(Gate::rz(0, t)), {{std::polar(1.0, -t / 2), 0}, {0, std::polar(1.0, t / 2)}}), 1e-15);
    EXPECT_LT(diff(one(Gate::phase(0, t)), {{1, 0}, {0, std::polar(1.0, t)}}), 1e-15);
}

TEST(circuit, two_qubit_gates_use_lsb_order) {
    // Index bit k is qubit k: CNOT(0 -> 1) sends |01> (index 1) to |11> (index 3).
    const auto cx = Circuit(2).add(Gate::cnot(0, 1)).to_dense();
    EXPECT_EQ(cx(3, 1), Complex(1.0));
    EXPECT_EQ(cx(1, 3), Complex(1.0));
    EXPECT_EQ(cx(2, 2), Complex(1.0));
    const auto cz = Circuit(2).add(Gate::cz(0, 1)).to_dense();
    EXPECT_EQ(cz(3, 3), Complex(-1.0));
    EXPECT_EQ(cz(1, 1), Complex(1.0));
    const auto sw = Circuit(2).add(Gate::swap(0, 1)).to_dense();
    EXPECT_EQ(sw(2, 1), Complex(1.0));
}

TEST(circuit, validation) {
    Circuit c(2);
    EXPECT_THROW(c.add(Gate::h(2)), Error);
    EXPECT_THROW(c.add(Gate::cnot(1, 1)), Error);
    Gate g = Gate::x(0);
    g.controls = {0};
    EXPECT_THROW(c.add(g), Error);
    try {
        Gate::unitary_block({0}, DenseMatrix(2, 2, {1.0, 1.0, 0.0, 1.0}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNonUnitaryBlock);
    }
}

TEST(circuit, inverse_undoes) {
    std::mt19937_64 rng(1);
    Circuit c = random_circuit(3, rng);
    c.add(Gate::s(1));
    c.add(Gate::phase(2, 0.3));
    Circuit both = c;
    both.append(c.inverse());
    EXPECT_LT(max_abs_diff(both.to_dense(), DenseMatrix::identity(8)), 1e-13);
}

TEST(circuit, controlled_wraps_every_gate) {
    std::mt19937_64 rng(2);
    const Circuit c = random_circuit(2, rng, 5);
    const DenseMatrix u = c.to_dense();
    const DenseMatrix cu = c.controlled(2).to_dense();
    for (std::size_t i = 0; i < 4; i++)
        for (std::size_t j = 0; j < 4; j++) {
            EXPECT_NEAR(std::abs(cu(i, j) - (i == j ? 1.0 : 0.0)), 0.0, 1e-14);
            EXPECT_NEAR(std::abs(cu(i + 4, j + 4) - u(i, j)), 0.0, 1e-14);
            EXPECT_EQ(cu(i + 4, j), Complex(0.0));
        }
}

TEST(circuit, qft_is_dft) {
    for (unsigned q = 1; q <= 5; q++) {
        const Circuit c = qft_circuit(q);
        EXPECT_LT(diff(c.to_dense(), dft_ref(std::size_t{1} << q)), 1e-12) << q;
        EXPECT_LT(diff(inverse_qft_circuit(q).to_dense(), dagger(dft_ref(std::size_t{1} << q))), 1e-12);
        EXPECT_EQ(c.count(GateKind::kH), q);
        EXPECT_EQ(c.count(GateKind::kPhase), q * (q - 1) / 2);
        EXPECT_EQ(c.count(GateKind::kH) + c.count(GateKind::kPhase), q * (q + 1) / 2);
        EXPECT_EQ(c.count(GateKind::kSwap), q / 2);
    }
}

TEST(circuit, shift_circuit_is_power_of_l) {
    for (unsigned q = 1; q <= 4; q++) {
        const std::size_t n = std::size_t{1} << q;
        for (long l = -long(n); l <= long(n); l++) {
            EXPECT_LT(diff(shift_circuit(n, l).to_dense(), shift_ref(n, l)), 1e-12) << n << " " << l;
        }
    }
    EXPECT_TRUE(shift_circuit(8, 8).empty());
    EXPECT_TRUE(shift_circuit(8, 0).empty());
}

TEST(circuit, controlled_shift_blocks) {
    const std::size_t n = 8;
    for (long l : {-3L, -1L, 1L, 2L, 5L}) {
        const DenseMatrix c = controlled_Ll_circuit(n, l).to_dense();
        const Mat want = add(kron_ref({{1, 0}, {0, 0}}, eye(n)), kron_ref({{0, 0}, {0, 1}}, shift_ref(n, l)));
        EXPECT_LT(diff(c, want), 1e-12) << l;
    }
}

TEST(circuit, state_preparation) {
    std::mt19937_64 rng(3);
    const auto check = [](const StateVector &s) {
        const StateVector out = run_statevector(state_preparation_circuit(s), StateVector(s.num_qubits()));
        for (std::size_t i = 0; i < s.dimension(); i++) EXPECT_NEAR(std::abs(out[i] - s[i]), 0.0, 1e-13);
    };
    check(StateVector::uniform(3));
    check(StateVector::basis(3, 5));
    for (int t = 0; t < 10; t++) check(StateVector::from_amplitudes(random_state(8, rng)));
    EXPECT_EQ(state_preparation_circuit(StateVector::uniform(3)).count(GateKind::kH), 3u);
}

TEST(circuit, hadamard_test_matches_dense_bracket) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; t++) {
        const Circuit u = random_circuit(3, rng, 6);
        const auto l = random_state(8, rng), r = random_state(8, rng);
        const Circuit lp = state_preparation_circuit(StateVector::from_amplitudes(l));
        const Circuit rp = state_preparation_circuit(StateVector::from_amplitudes(r));
        const DenseMatrix ud = u.to_dense();
        Mat um = zeros(8, 8);
        for (std::size_t i = 0; i < 8; i++)
            for (std::size_t j = 0; j < 8; j++) um[i][j] = ud(i, j);
        const Complex want = bracket_ref(l, um, r);
        const Complex got = hadamard_bracket(3, u.controlled(3), lp, rp, ExactMode{});
        EXPECT_NEAR(std::abs(got - want), 0.0, 1e-12);
        const Complex same = hadamard_bracket(3, u.controlled(3), rp, rp, ExactMode{});
        EXPECT_NEAR(std::abs(same - bracket_ref(r, um, r)), 0.0, 1e-12);
    }
}

TEST(circuit, bell_circuits_resolve_each_pair_kind) {
    std::mt19937_64 rng(5);
    const unsigned q = 3;
    for (std::size_t i = 0; i < 8; i++) {
        for (std::size_t j = 0; j < 8; j++) {
            for (PairKind kind : {PairKind::kDiagonal, PairKind::kSymmetric, PairKind::kAntisymmetric}) {
                if (i == j && kind != PairKind::kDiagonal) continue;
                Mat want = zeros(8, 8);
                if (kind == PairKind::kDiagonal) {
                    want[i][i] += 1.0;
                    if (i != j) want[j][j] += 1.0;
                } else if (kind == PairKind::kSymmetric) {
                    want[i][j] = want[j][i] = 1.0;
                } else {
                    want[i][j] = Complex(0, 1);
                    want[j][i] = Complex(0, -1);
                }
                const ProjectorPair pair{i, j, kind};
                Mat sum = zeros(8, 8);
                for (const auto &[prep, sign] : bell_pair_circuits(pair, q)) {
                    const auto phi = amps(run_statevector(prep, StateVector(q)));
                    sum = add(sum, column_outer(phi), double(sign));
                }
                double worst = 0.0;
                for (std::size_t a = 0; a < 8; a++)
                    for (std::size_t b = 0; b < 8; b++) worst = std::max(worst, std::abs(sum[a][b] - want[a][b]));
                EXPECT_LT(worst, 1e-12) << i << "," << j;
                const auto psi = random_state(8, rng);
                const Circuit pp = state_preparation_circuit(StateVector::from_amplitudes(psi));
                EXPECT_NEAR(bell_expectation(pair, q, pp, ExactMode{}), bracket_ref(psi, want, psi).real(), 1e-12);
            }
        }
    }
    EXPECT_THROW(bell_pair_circuits({2, 2, PairKind::kSymmetric}, q), Error);
    EXPECT_THROW(bell_pair_circuits({2, 9, PairKind::kDiagonal}, q), Error);
}

TEST(circuit, reflection_about_prepared_state) {
    std::mt19937_64 rng(6);
    const auto phi = random_state(8, rng);
    const Circuit prep = state_preparation_circuit(StateVector::from_amplitudes(phi));
    EXPECT_LT(diff(reflection_circuit(prep).to_dense(), add(eye(8), column_outer(phi), -2.0)), 1e-12);
}

TEST(circuit, shot_mode_hadamard_test) {
    std::mt19937_64 rng(7);
    const Circuit u = random_circuit(2, rng, 4);
    const Circuit prep = state_preparation_circuit(StateVector::from_amplitudes(random_state(4, rng)));
    const double exact = hadamard_test(2, u.controlled(2), prep, prep, BracketPart::kReal, ExactMode{});
    const double est = hadamard_test(2, u.controlled(2), prep, prep, BracketPart::kReal, ShotMode{100000, 9});
    EXPECT_NEAR(est, exact, 3.0 / std::sqrt(100000.0) * 2);
    EXPECT_EQ(est, hadamard_test(2, u.controlled(2), prep, prep, BracketPart::kReal, ShotMode{100000, 9}));
    try {
        hadamard_test(2, u.controlled(2), prep, prep, BracketPart::kReal, ShotMode{0, 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kShotCountZero);
    }
}

TEST(circuit, sample_shots_counts) {
    Circuit c(2);
    c.add(Gate::x(0));  // |q1 q0> = |01>
    const auto r = sample_shots(c, StateVector(2), 500, 3);
    ASSERT_EQ(r.counts.size(), 1u);
    EXPECT_EQ(r.counts.at("01"), 500u);
    Circuit h(2);
    h.add(Gate::h(0)).add(Gate::h(1));
    const auto u = sample_shots(h, StateVector(2), 40000, 4);
    std::uint64_t total = 0;
    for (const auto &[bits, k] : u.counts) {
        total += k;
        EXPECT_NEAR(double(k) / 40000.0, 0.25, 0.02) << bits;
    }
    EXPECT_EQ(total, 40000u);
    EXPECT_EQ(u.counts, sample_shots(h, StateVector(2), 40000, 4).counts);
    EXPECT_THROW(sample_shots(h, StateVector(2), 0, 4), Error);
}

TEST(circuit, derived_seeds_differ) {
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
    EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
    EXPECT_TRUE(is_exact(derive_mode(ExactMode{}, 4)));
}
