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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pvqa/cost.h"
#include "pvqa/estimator.h"
#include "pvqa/optimizer.h"
#include "reference.h"

using namespace pvqa;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char *title, bool pass, const std::string &detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    failures += !pass;
}

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Circuit prep_of(const std::vector<Complex> &v) {
    return state_preparation_circuit(StateVector::from_amplitudes(v));
}

Parameters random_params(const AnsatzSpec &s, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    Parameters p(s.parameter_count());
    for (auto &x : p) x = u(rng);
    return p;
}

Complex dense_bracket(const DenseMatrix &m, const std::vector<Complex> &l, const std::vector<Complex> &r) {
    const auto mr = m.apply(r);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < mr.size(); i++) acc += std::conj(l[i]) * mr[i];
    return acc;
}

void criterion_1() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    int cases = 0;
    for (std::size_t n : {4, 8, 16}) {
        const auto dir = decompose_dirichlet_1d(n);
        const DenseMatrix a1 = build_poisson_1d(n, 0.0, 0.0);
        worst = std::max({worst, max_abs_diff(reconstruct_dense(dir.a), a1),
                          max_abs_diff(reconstruct_dense(dir.a_squared), a1 * a1)});
        cases += 2;
        for (int t = 0; t < 10; t++) {
            const double c = unit(rng), d = unit(rng);
            const auto uni = decompose_unified_1d(n, c, d);
            const DenseMatrix au = build_poisson_1d(n, c, d);
            worst = std::max({worst, max_abs_diff(reconstruct_dense(uni.a), au),
                              max_abs_diff(reconstruct_dense(uni.a_squared), au * au)});
            cases += 2;
        }
        for (unsigned dim = 1; dim <= 3; dim++) {
            PoissonProblem p;
            p.dimension = dim;
            p.qubits_per_axis = log2_exact(n);
            if (p.total_size() > kMaxDenseDim) continue;
            const DenseMatrix ad = build_poisson_dd(p);
            worst = std::max(worst, max_abs_diff(reconstruct_dense(decompose_dirichlet_dd(dim, n)), ad));
            const DenseMatrix ad2 = ad * ad;
            worst = std::max(worst, max_abs_diff(reconstruct_dense(decompose_dirichlet_dd_squared(dim, n)), ad2));
            cases += 2;
        }
    }
    const double secs = seconds_since(t0);
    report(1, "decomposition exactness", worst <= 1e-12 && secs < 10.0,
           fmt("%g cases, max error %.2e, %.1f s", cases, worst, secs));
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    const auto uni = decompose_unified_1d(8, 0.3, 0.6);
    ok &= count_terms(uni.a) == 5 && count_terms(uni.a_squared) == 6;
    detail = "unified " + std::to_string(count_terms(uni.a)) + "/" + std::to_string(count_terms(uni.a_squared));
    for (unsigned d = 1; d <= 3; d++) {
        const auto a = count_terms(decompose_dirichlet_dd(d, 4));
        const auto a2 = count_terms(decompose_dirichlet_dd_squared(d, 4));
        ok &= a == 4 * d + 1 && a2 == 12 * d * d;
        detail += ", d=" + std::to_string(d) + " " + std::to_string(a) + "/" + std::to_string(a2);
    }
    report(2, "term counts", ok, detail);
}

// Splits a list into single-term lists so every term is checked on its own.
std::vector<TermList> singletons(const TermList &list) {
    std::vector<TermList> out;
    for (const auto &t : list.terms) out.push_back({list.kind, list.n, list.dimension, list.target + ": " + t.label, {t}});
    return out;
}

void criterion_3() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(303);
    std::vector<TermList> families;
    for (const auto &d : {decompose_dirichlet_1d(8), decompose_unified_1d(8, 0.35, 0.8)}) {
        families.push_back(d.a);
        families.push_back(d.a_squared);
    }
    families.push_back(decompose_dirichlet_dd(2, 4));
    families.push_back(decompose_dirichlet_dd_squared(2, 4));
    const ToeplitzSpec spec(8, {{-2, Complex(0.3, -0.2)}, {-1, Complex(-1.0, 0.4)}, {0, 2.0},
                                {1, Complex(0.5, 0.9)}, {2, Complex(-0.1, 0.25)}});
    families.push_back(decompose_toeplitz(spec));
    families.push_back(decompose_toeplitz_gram(spec));
    double worst = 0.0;
    std::size_t terms = 0;
    for (const auto &family : families) {
        for (const auto &single : singletons(family)) {
            const DenseMatrix m = reconstruct_dense(single);
            terms++;
            for (int t = 0; t < 200; t++) {
                const auto l = testing::random_state(m.rows(), rng);
                const auto r = testing::random_state(m.rows(), rng);
                const Complex want = single.kind == BracketKind::kTransition ? dense_bracket(m, l, r) : dense_bracket(m, r, r);
                const Complex got = estimate_term_list(single, prep_of(l), prep_of(r), ExactMode{}).value;
                worst = std::max(worst, std::abs(got - want));
            }
        }
    }
    report(3, "estimator correctness", worst <= 1e-10,
           fmt("%g terms x 200 states, max error %.2e, %.1f s", double(terms), worst, seconds_since(t0)));
}

void criterion_4() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(404);
    double worst = 0.0;
    int families = 0;
    std::vector<PoissonProblem> problems(4);
    problems[0].qubits_per_axis = 3;
    problems[1].qubits_per_axis = 3;
    problems[1].boundary = BoundaryCondition::unified(1.2, 0.8, 0.6, 1.7);
    problems[2].dimension = 2;
    problems[2].qubits_per_axis = 2;
    problems[3].dimension = 3;
    problems[3].qubits_per_axis = 2;
    for (const auto &p : problems) {
        const auto lists = decompose_problem(p);
        const DenseMatrix a = build_poisson_matrix(p);
        const StateVector b = prepare_b(p);
        const Circuit bp = state_preparation_circuit(b);
        const AnsatzSpec s{p.total_qubits(), 2};
        for (int t = 0; t < 200; t++) {
            const auto th = random_params(s, rng);
            const double got = cost_from_lists(lists, bp, ansatz_circuit(s, th), ExactMode{}).cost;
            worst = std::max(worst, std::abs(got - dense_system_cost(a, b, ansatz_state(s, th))));
        }
        families++;
    }
    // Toeplitz system and matrix-vector costs.
    const ToeplitzSpec spec(8, {{-2, Complex(0.2, 0.1)}, {-1, -0.7}, {0, 1.9}, {1, Complex(0.4, -0.3)}, {2, 0.6}});
    const DenseMatrix t = toeplitz_to_dense(spec);
    const StateVector b = StateVector::from_amplitudes(testing::random_state(8, rng));
    const Circuit bp = state_preparation_circuit(b);
    const AnsatzSpec s{3, 2, Rotation::kRzRyRz};
    for (int k = 0; k < 200; k++) {
        const auto th = random_params(s, rng);
        const StateVector psi = ansatz_state(s, th);
        worst = std::max(worst, std::abs(cost_toeplitz_system(spec, bp, s, th, ExactMode{}).cost - dense_system_cost(t, b, psi)));
        worst = std::max(worst, std::abs(cost_matvec(spec, b, s, th, ExactMode{}).cost - dense_matvec_cost(t, b, psi)));
    }
    families += 2;
    report(4, "cost equivalence", worst <= 1e-10,
           fmt("%g families x 200 parameter draws, max error %.2e, %.1f s", families, worst, seconds_since(t0)));
}

void criterion_5() {
    const auto t0 = Clock::now();
    PoissonProblem p;
    p.qubits_per_axis = 3;
    const auto lists = decompose_problem(p);
    const AnsatzSpec s{3, 2, Rotation::kRyOnly, Entangler::kCnotChain};
    const Circuit bp = state_preparation_circuit(prepare_b(p));
    OptimizerConfig c;
    c.restarts = 5;
    c.seed = 5;
    const auto trace = optimize(
        [&](const Parameters &th) { return cost_from_lists(lists, bp, ansatz_circuit(s, th), ExactMode{}).cost; }, s, c);
    const double fid = solution_fidelity(p, s, trace.best_parameters);
    const double secs = seconds_since(t0);
    report(5, "N=3 Dirichlet experiment (depth 2, ry-only)", fid > 0.99 && trace.best_cost < 1e-3 && secs < 120.0,
           fmt("best fidelity %.6f, best cost %.2e, %.1f s", fid, trace.best_cost, secs));
}

void criterion_6() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(606);
    std::normal_distribution<double> g;
    std::uniform_int_distribution<int> band(1, 2);
    int passed = 0;
    double worst_fid = 1.0, worst_cost = 0.0;
    for (int k = 0; k < 20; k++) {
        const int K = band(rng);
        std::map<int, Complex> coeffs;
        for (int l = -K; l <= K; l++) coeffs[l] = {g(rng), g(rng)};
        const ToeplitzSpec spec(8, coeffs);
        const StateVector v0 = StateVector::from_amplitudes(testing::random_state(8, rng));
        const StateVector target = normalize(classical_toeplitz_matvec(spec, v0.amplitudes()));
        const AnsatzSpec s{3, 3, Rotation::kRzRyRz};
        OptimizerConfig c;
        c.restarts = 5;
        c.seed = 6000 + k;
        const auto trace =
            optimize([&](const Parameters &th) { return cost_matvec(spec, v0, s, th, ExactMode{}).cost; }, s, c);
        const double fid = fidelity(target, ansatz_state(s, trace.best_parameters));
        worst_fid = std::min(worst_fid, fid);
        worst_cost = std::max(worst_cost, trace.best_cost);
        passed += fid > 0.99 && trace.best_cost < 1e-3;
    }
    report(6, "matrix-vector multiplication", passed == 20,
           fmt("%g/20 specs, worst fidelity %.6f, worst cost %.2e", passed, worst_fid, worst_cost) +
               fmt(", %.1f s", seconds_since(t0)));
}

void criterion_7() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(707);
    const std::uint64_t shots = 100000;
    const double bound = 3.0 / std::sqrt(double(shots));
    // Each entry: exact value and a seeded shot estimate of one bracket component.
    struct Component {
        std::string name;
        double exact;
        std::function<double(std::uint64_t)> estimate;
    };
    std::vector<Component> comps;
    const auto l = testing::random_state(8, rng), r = testing::random_state(8, rng);
    const Circuit lp = prep_of(l).widened(4), rp = prep_of(r).widened(4);
    for (long power : {1L, -1L, 2L}) {
        const Circuit cu = controlled_Ll_circuit(16, power);
        for (BracketPart part : {BracketPart::kReal, BracketPart::kImag}) {
            const double exact = hadamard_test(4, cu, lp, rp, part, ExactMode{});
            comps.push_back({"L^" + std::to_string(power), exact, [=](std::uint64_t seed) {
                                 return hadamard_test(4, cu, lp, rp, part, ShotMode{shots, seed});
                             }});
        }
    }
    const auto psi16 = testing::random_state(16, rng);
    const Circuit pp16 = prep_of(psi16);
    const Circuit word = controlled_word_circuit(TensorWord{{Letter::kLXZ, Letter::kXLinv}}, 4, 2);
    for (BracketPart part : {BracketPart::kReal, BracketPart::kImag}) {
        const double exact = hadamard_test(4, word, pp16, pp16, part, ExactMode{});
        comps.push_back({"word", exact, [=](std::uint64_t seed) {
                             return hadamard_test(4, word, pp16, pp16, part, ShotMode{shots, seed});
                         }});
    }
    const Circuit pp8 = prep_of(r).widened(3);
    for (const ProjectorPair pair : {ProjectorPair{0, 0, PairKind::kDiagonal}, ProjectorPair{0, 1, PairKind::kSymmetric},
                                     ProjectorPair{6, 7, PairKind::kAntisymmetric}}) {
        for (const auto &[prep, sign] : bell_pair_circuits(pair, 3)) {
            const double exact = zero_string_probability(pp8, prep, ExactMode{});
            comps.push_back({"bell", exact, [=, prep = prep](std::uint64_t seed) {
                                 return zero_string_probability(pp8, prep, ShotMode{shots, seed});
                             }});
        }
    }
    double worst_rate = 1.0;
    for (const auto &c : comps) {
        int inside = 0;
        for (std::uint64_t seed = 0; seed < 1000; seed++) {
            inside += std::abs(c.estimate(derive_seed(77, seed)) - c.exact) <= bound;
        }
        worst_rate = std::min(worst_rate, inside / 1000.0);
    }
    report(7, "shot-mode statistics", worst_rate >= 0.99,
           fmt("%g components x 1000 trials, worst coverage %.3f, %.1f s", double(comps.size()), worst_rate,
               seconds_since(t0)));
}

void criterion_8() {
    double worst = 0.0;
    for (unsigned q = 1; q <= 5; q++) {
        const std::size_t n = std::size_t{1} << q;
        worst = std::max(worst, testing::diff(qft_circuit(q).to_dense(), testing::dft_ref(n)));
        for (long l = -long(n); l <= long(n); l++) {
            const DenseMatrix d = phase_tower_circuit(phase_spectrum(n, l)).to_dense();
            for (std::size_t j = 0; j < n; j++) {
                const Complex want = std::polar(1.0, 2.0 * std::numbers::pi * double(l) * double(j) / double(n));
                worst = std::max(worst, std::abs(d(j, j) - want));
            }
            worst = std::max(worst, testing::diff(shift_circuit(n, l).to_dense(), testing::shift_ref(n, l)));
        }
    }
    report(8, "QFT and phase-tower realizations", worst <= 1e-12, fmt("max error %.2e over 1..5 qubits", worst));
}

void criterion_9() {
    bool ok = true;
    std::string detail;
    for (unsigned q = 1; q <= 8; q++) {
        const Circuit c = qft_circuit(q);
        const std::size_t rotations = c.count(GateKind::kH) + c.count(GateKind::kPhase);
        ok &= rotations == q * (q + 1) / 2 && c.count(GateKind::kPhase) == q * (q - 1) / 2 &&
              c.count(GateKind::kSwap) == q / 2 && c.gates().size() == q * (q + 1) / 2 + q / 2;
        if (q == 3 || q == 8) {
            detail += (detail.empty() ? "" : ", ") + std::string("q=") + std::to_string(q) + ": " +
                      std::to_string(rotations) + " H+CP, " + std::to_string(c.count(GateKind::kSwap)) + " swaps";
        }
    }
    report(9, "QFT gate count", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    return failures == 0 ? 0 : 1;
}
