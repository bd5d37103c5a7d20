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

#include "pvqa/commands.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "pvqa/cost.h"
#include "pvqa/error.h"
#include "pvqa/estimator.h"

namespace pvqa {

namespace {

namespace fs = std::filesystem;

Json load_config(const RunOptions &options) {
    if (!options.config_path) {
        return Json::object();
    }
    std::ifstream in(*options.config_path);
    if (!in) {
        throw Error(ErrorCode::kInvalidArgument, "cannot open config '" + *options.config_path + "'");
    }
    try {
        Json j = Json::parse(in);
        if (!j.is_object()) {
            throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
        }
        return j;
    } catch (const Json::parse_error &e) {
        throw Error(ErrorCode::kInvalidArgument, std::string("malformed JSON in config: ") + e.what());
    }
}

const Json &section(const Json &config, const char *key) {
    static const Json empty = Json::object();
    return config.contains(key) ? config.at(key) : empty;
}

std::uint64_t resolve_seed(const RunOptions &o, const Json &config) {
    if (o.seed) {
        return *o.seed;
    }
    return config.contains("seed") ? config.at("seed").get<std::uint64_t>() : 0;
}

EstimationMode resolve_mode(const RunOptions &o, const Json &config, std::uint64_t seed) {
    std::string text = "exact";
    if (o.shots) {
        text = *o.shots;
    } else if (config.contains("shots")) {
        const Json &s = config.at("shots");
        text = s.is_string() ? s.get<std::string>() : std::to_string(s.get<long long>());
    }
    return mode_from_string(text, derive_seed(seed, 0xC0DE));
}

AnsatzSpec resolve_ansatz(const RunOptions &o, const Json &config, unsigned num_qubits) {
    AnsatzSpec a = ansatz_from_json(section(config, "ansatz"), num_qubits);
    if (o.depth) {
        a.depth = *o.depth;
    }
    a.validate();
    return a;
}

OptimizerConfig resolve_optimizer(const RunOptions &o, const Json &config, std::uint64_t seed,
                                  const EstimationMode &mode) {
    OptimizerConfig c = optimizer_from_json(section(config, "optimizer"));
    if (o.restarts) {
        c.restarts = *o.restarts;
    }
    c.seed = seed;
    c.cost_mode = mode;
    c.validate();
    return c;
}

fs::path prepare_out(const RunOptions &o) {
    fs::path dir(o.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error(ErrorCode::kInvalidArgument, "output directory '" + o.out_dir + "' is not writable");
    }
    return dir;
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path.string() + "'");
    }
    out << text;
}

Json ansatz_json(const AnsatzSpec &a) {
    return {{"num_qubits", a.num_qubits},
            {"depth", a.depth},
            {"rotation", rotation_name(a.rotation)},
            {"entangler", entangler_name(a.entangler)},
            {"parameters", a.parameter_count()}};
}

Json optimizer_json(const OptimizerConfig &c) {
    return {{"method", method_name(c.method)},
            {"max_iters", c.max_iters},
            {"restarts", c.restarts},
            {"seed", c.seed},
            {"tolerance", c.tolerance},
            {"patience", c.patience},
            {"shots", mode_to_string(c.cost_mode)}};
}

// Wraps a mode-dependent cost so that every evaluation in shot mode draws
// from its own deterministic stream.
CostFunction streamed(std::function<double(const Parameters &, const EstimationMode &)> f, EstimationMode mode) {
    auto counter = std::make_shared<std::uint64_t>(0);
    return [f = std::move(f), mode, counter](const Parameters &p) { return f(p, derive_mode(mode, (*counter)++)); };
}

struct Outcome {
    TrainingTrace trace;
    double seconds = 0.0;
};

Outcome run_optimizer(const CostFunction &cost, const AnsatzSpec &ansatz, const OptimizerConfig &config,
                      const FidelityFunction &fid) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out{optimize(cost, ansatz, config, fid), 0.0};
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

void write_artifacts(const fs::path &dir, const TrainingTrace &trace, Json summary) {
    std::ostringstream csv;
    trace.write_csv(csv);
    write_text(dir / "trace.csv", csv.str());
    write_text(dir / "summary.json", summary.dump(2) + "\n");
}

Json trace_summary(const TrainingTrace &trace) {
    return {{"best_cost", trace.best_cost},
            {"best_restart", trace.best_restart},
            {"best_parameters", trace.best_parameters},
            {"restart_best_costs", trace.restart_best_costs},
            {"evaluations", trace.evaluations}};
}

int exit_code_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::kDimensionOverflow:
            return kExitCapExceeded;
        case ErrorCode::kZeroImage:
            return kExitZeroImage;
        default:
            return kExitConfig;
    }
}

template <typename Body>
int guarded(std::ostream &err, Body &&body) {
    try {
        return body();
    } catch (const Error &e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const Json::exception &e) {
        err << "error [InvalidArgument]: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fs::filesystem_error &e) {
        err << "error [InvalidArgument]: " << e.what() << "\n";
        return kExitConfig;
    }
}

double max_error(const DenseMatrix &a, const DenseMatrix &b) {
    return max_abs_diff(a, b);
}

}  // namespace

int cmd_solve_poisson(const RunOptions &options, std::ostream &log, std::ostream &err) {
    return guarded(err, [&] {
        const Json config = load_config(options);
        const Json &pj = config.contains("problem") ? config.at("problem") : config;
        const PoissonProblem problem = problem_from_json(pj);
        const std::uint64_t seed = resolve_seed(options, config);
        const EstimationMode mode = resolve_mode(options, config, seed);
        const AnsatzSpec ansatz = resolve_ansatz(options, config, problem.total_qubits());
        const OptimizerConfig opt = resolve_optimizer(options, config, seed, mode);
        const fs::path dir = prepare_out(options);
        if (problem.total_size() > kMaxDenseDim) {
            throw Error(ErrorCode::kDimensionOverflow,
                        "n^d = " + std::to_string(problem.total_size()) + " exceeds the dense oracle cap of " +
                            std::to_string(kMaxDenseDim) + " needed for verification and fidelity");
        }

        // Never optimize a miscompiled cost: check both lists against the oracle first.
        const OperatorDecomposition lists = decompose_problem(problem);
        const DenseMatrix a = build_poisson_matrix(problem);
        const double err_a = max_error(reconstruct_dense(lists.a), a);
        const double err_a2 = max_error(reconstruct_dense(lists.a_squared), a * a);
        if (err_a > 1e-10 || err_a2 > 1e-10) {
            err << "verification failed: " << lists.a.target << " error " << err_a << ", " << lists.a_squared.target
                << " error " << err_a2 << "\n";
            return kExitVerifyFail;
        }
        log << "verified " << lists.a.target << " (" << count_terms(lists.a) << " brackets) and "
            << lists.a_squared.target << " (" << count_terms(lists.a_squared) << " brackets)\n";

        const Circuit b_prep = state_preparation_circuit(prepare_b(problem));
        const StateVector x = solution_state(problem);
        auto cost = streamed(
            [&](const Parameters &p, const EstimationMode &m) {
                return cost_from_lists(lists, b_prep, ansatz_circuit(ansatz, p), m).cost;
            },
            mode);
        const FidelityFunction fid = [&](const Parameters &p) { return fidelity(x, ansatz_state(ansatz, p)); };
        const Outcome run = run_optimizer(cost, ansatz, opt, fid);

        const double final_exact = cost_from_lists(lists, b_prep, ansatz_circuit(ansatz, run.trace.best_parameters),
                                                   ExactMode{})
                                       .cost;
        const double best_fid = fid(run.trace.best_parameters);
        Json summary = trace_summary(run.trace);
        summary["subcommand"] = "solve-poisson";
        summary["problem"] = problem_to_json(problem);
        summary["ansatz"] = ansatz_json(ansatz);
        summary["optimizer"] = optimizer_json(opt);
        summary["best_fidelity"] = best_fid;
        summary["exact_cost_at_best"] = final_exact;
        summary["restarts"] = opt.restarts;
        summary["term_counts"] = {{"a", count_terms(lists.a)}, {"a_squared", count_terms(lists.a_squared)}};
        summary["verification"] = {{"a_max_error", err_a}, {"a_squared_max_error", err_a2}};
        summary["wall_time"] = run.seconds;
        write_artifacts(dir, run.trace, summary);
        log << "best cost " << run.trace.best_cost << ", fidelity " << best_fid << " after " << opt.restarts
            << " restarts\n";
        return kExitOk;
    });
}

int cmd_toeplitz(const RunOptions &options, ToeplitzTask task, std::ostream &log, std::ostream &err) {
    return guarded(err, [&] {
        const Json config = load_config(options);
        if (!config.contains("toeplitz")) {
            throw Error(ErrorCode::kInvalidArgument, "config needs a 'toeplitz' section");
        }
        const ToeplitzSpec spec = toeplitz_from_json(config.at("toeplitz"));
        const unsigned q = log2_exact(spec.size());
        const std::uint64_t seed = resolve_seed(options, config);
        const EstimationMode mode = resolve_mode(options, config, seed);
        const AnsatzSpec ansatz = resolve_ansatz(options, config, q);
        const OptimizerConfig opt = resolve_optimizer(options, config, seed, mode);
        const fs::path dir = prepare_out(options);
        if (spec.size() > kMaxDenseDim) {
            throw Error(ErrorCode::kDimensionOverflow, "Toeplitz size exceeds the dense oracle cap");
        }
        const DenseMatrix t = toeplitz_to_dense(spec);
        Json summary;
        Outcome run;
        double best_fid = 0.0;

        if (task == ToeplitzTask::kSolve) {
            const StateVector b = state_from_json(config.contains("b") ? config.at("b") : Json("uniform"), q);
            const OperatorDecomposition lists = decompose_toeplitz_system(spec);
            const double err_a = max_error(reconstruct_dense(lists.a), t);
            const double err_a2 = max_error(reconstruct_dense(lists.a_squared), t.adjoint() * t);
            if (err_a > 1e-10 || err_a2 > 1e-10) {
                err << "verification failed: " << lists.a.target << " error " << err_a << ", "
                    << lists.a_squared.target << " error " << err_a2 << "\n";
                return kExitVerifyFail;
            }
            const Circuit b_prep = state_preparation_circuit(b);
            std::optional<StateVector> x;
            try {
                x = normalize(dense_solve(t, b.amplitudes()));
            } catch (const Error &e) {
                if (e.code() != ErrorCode::kSingularMatrix) {
                    throw;
                }
                log << "T is singular; fidelity is not reported\n";
            }
            auto cost = streamed(
                [&](const Parameters &p, const EstimationMode &m) {
                    return cost_from_lists(lists, b_prep, ansatz_circuit(ansatz, p), m).cost;
                },
                mode);
            FidelityFunction fid;
            if (x) {
                fid = [&](const Parameters &p) { return fidelity(*x, ansatz_state(ansatz, p)); };
            }
            run = run_optimizer(cost, ansatz, opt, fid);
            summary = trace_summary(run.trace);
            summary["subcommand"] = "toeplitz solve";
            summary["exact_cost_at_best"] =
                cost_from_lists(lists, b_prep, ansatz_circuit(ansatz, run.trace.best_parameters), ExactMode{}).cost;
            summary["term_counts"] = {{"a", count_terms(lists.a)}, {"a_squared", count_terms(lists.a_squared)}};
            summary["verification"] = {{"a_max_error", err_a}, {"a_squared_max_error", err_a2}};
            if (x) {
                best_fid = fid(run.trace.best_parameters);
                summary["best_fidelity"] = best_fid;
            } else {
                summary["best_fidelity"] = nullptr;
            }
        } else {
            if (!config.contains("v0")) {
                throw Error(ErrorCode::kInvalidArgument, "matvec needs a 'v0' vector");
            }
            const StateVector v0 = state_from_json(config.at("v0"), q);
            const double image_norm = matvec_image_norm(spec, v0);
            const StateVector target = normalize(classical_toeplitz_matvec(spec, v0.amplitudes()));
            const TermList list = decompose_toeplitz(spec);
            const Circuit v0_prep = state_preparation_circuit(v0);
            auto matvec = [&](const Parameters &p, const EstimationMode &m) {
                const auto est = estimate_transition(list, ansatz_circuit(ansatz, p), v0_prep, m);
                return 1.0 - std::norm(est.value) / (image_norm * image_norm);
            };
            auto cost = streamed(matvec, mode);
            const FidelityFunction fid = [&](const Parameters &p) { return fidelity(target, ansatz_state(ansatz, p)); };
            run = run_optimizer(cost, ansatz, opt, fid);
            best_fid = fid(run.trace.best_parameters);
            summary = trace_summary(run.trace);
            summary["subcommand"] = "toeplitz matvec";
            summary["exact_cost_at_best"] = matvec(run.trace.best_parameters, ExactMode{});
            summary["image_norm"] = image_norm;
            summary["term_counts"] = {{"a", count_terms(list)}};
            summary["best_fidelity"] = best_fid;
        }
        summary["toeplitz"] = toeplitz_to_json(spec);
        summary["ansatz"] = ansatz_json(ansatz);
        summary["optimizer"] = optimizer_json(opt);
        summary["restarts"] = opt.restarts;
        summary["wall_time"] = run.seconds;
        write_artifacts(dir, run.trace, summary);
        log << "best cost " << run.trace.best_cost << ", fidelity " << best_fid << "\n";
        return kExitOk;
    });
}

bool VerifyReport::all_pass() const {
    for (const auto &c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    for (const auto &r : term_counts) {
        if (r.count != r.expected) {
            return false;
        }
    }
    return true;
}

Json VerifyReport::to_json() const {
    Json checks_json = Json::array();
    for (const auto &c : checks) {
        checks_json.push_back(
            {{"name", c.name}, {"max_error", c.max_error}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    Json counts = Json::array();
    for (const auto &r : term_counts) {
        counts.push_back({{"family", r.family},
                          {"dimension", r.dimension},
                          {"brackets", r.count},
                          {"expected", r.expected},
                          {"matrix_terms", r.matrix_terms},
                          {"pass", r.count == r.expected}});
    }
    return {{"checks", checks_json}, {"term_counts", counts}, {"all_pass", all_pass()}};
}

namespace {

struct Suite {
    VerifyReport report;
    std::optional<FaultInjection> fault;
    std::mt19937_64 rng;

    void check(std::string name, double error, double tolerance) {
        report.checks.push_back({std::move(name), error, tolerance, error <= tolerance});
    }

    TermList maybe_corrupt(TermList list) {
        if (fault && fault->target == list.target && fault->term < list.terms.size()) {
            list.terms[fault->term].coefficient += fault->delta;
        }
        return list;
    }

    std::vector<Complex> random_vector(std::size_t dim) {
        std::normal_distribution<double> g;
        std::vector<Complex> v(dim);
        for (auto &z : v) {
            z = {g(rng), g(rng)};
        }
        return normalized(v);
    }

    // Circuits against dense brackets for one list on a few random states.
    void estimator_check(const TermList &list, int trials) {
        const DenseMatrix m = reconstruct_dense(list);
        double worst = 0.0;
        for (int t = 0; t < trials; t++) {
            const StateVector left = StateVector::from_amplitudes(random_vector(m.rows()));
            const StateVector right = StateVector::from_amplitudes(random_vector(m.rows()));
            const Circuit lp = state_preparation_circuit(left);
            const Circuit rp = state_preparation_circuit(right);
            const StateVector &bra = list.kind == BracketKind::kTransition ? left : right;
            const auto mr = m.apply(right.amplitudes());
            Complex dense{0.0, 0.0};
            for (std::size_t i = 0; i < mr.size(); i++) {
                dense += std::conj(bra[i]) * mr[i];
            }
            const Complex circ = estimate_term_list(list, lp, rp, ExactMode{}).value;
            worst = std::max(worst, std::abs(circ - dense));
        }
        check("estimators " + list.target + " n=" + std::to_string(list.n), worst, 1e-10);
    }
};

}  // namespace

VerifyReport run_verify_suite(std::uint64_t seed, const std::optional<FaultInjection> &fault) {
    Suite s{{}, fault, std::mt19937_64(seed)};
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Decomposition exactness.
    for (std::size_t n : {4, 8, 16}) {
        const std::string at = " n=" + std::to_string(n);
        const auto dir = decompose_dirichlet_1d(n);
        const DenseMatrix a1 = build_poisson_1d(n, 0.0, 0.0);
        s.check("reconstruct " + dir.a.target + at, max_error(reconstruct_dense(s.maybe_corrupt(dir.a)), a1), 1e-12);
        s.check("reconstruct " + dir.a_squared.target + at,
                max_error(reconstruct_dense(s.maybe_corrupt(dir.a_squared)), a1 * a1), 1e-12);
        const double c = unit(s.rng), d = unit(s.rng);
        const auto uni = decompose_unified_1d(n, c, d);
        const DenseMatrix au = build_poisson_1d(n, c, d);
        s.check("reconstruct " + uni.a.target + at, max_error(reconstruct_dense(s.maybe_corrupt(uni.a)), au), 1e-12);
        s.check("reconstruct " + uni.a_squared.target + at,
                max_error(reconstruct_dense(s.maybe_corrupt(uni.a_squared)), au * au), 1e-12);
        for (unsigned dim = 1; dim <= 3; dim++) {
            PoissonProblem p;
            p.dimension = dim;
            p.qubits_per_axis = log2_exact(n);
            if (p.total_size() > kMaxDenseDim) {
                continue;
            }
            const DenseMatrix ad = build_poisson_dd(p);
            const TermList la = s.maybe_corrupt(decompose_dirichlet_dd(dim, n));
            const TermList la2 = s.maybe_corrupt(decompose_dirichlet_dd_squared(dim, n));
            s.check("reconstruct " + la.target + at, max_error(reconstruct_dense(la), ad), 1e-12);
            s.check("reconstruct " + la2.target + at, max_error(reconstruct_dense(la2), ad * ad), 1e-12);
        }
    }
    {
        std::map<int, Complex> coeffs;
        std::normal_distribution<double> g;
        for (int l = -2; l <= 2; l++) {
            coeffs[l] = {g(s.rng), g(s.rng)};
        }
        const ToeplitzSpec spec(8, coeffs);
        const DenseMatrix t = toeplitz_to_dense(spec);
        const auto lists = decompose_toeplitz_system(spec);
        s.check("reconstruct " + lists.a.target + " n=8", max_error(reconstruct_dense(s.maybe_corrupt(lists.a)), t),
                1e-12);
        s.check("reconstruct " + lists.a_squared.target + " n=8",
                max_error(reconstruct_dense(s.maybe_corrupt(lists.a_squared)), t.adjoint() * t), 1e-12);
        s.estimator_check(lists.a, 3);
        s.estimator_check(lists.a_squared, 3);
    }

    // Bracket counts.
    {
        const auto uni = decompose_unified_1d(8, 0.3, 0.6);
        s.report.term_counts.push_back({uni.a.target, 1, count_terms(uni.a), 5, count_matrix_terms(uni.a)});
        s.report.term_counts.push_back(
            {uni.a_squared.target, 1, count_terms(uni.a_squared), 6, count_matrix_terms(uni.a_squared)});
        for (unsigned dim = 1; dim <= 3; dim++) {
            const TermList la = decompose_dirichlet_dd(dim, 4);
            const TermList la2 = decompose_dirichlet_dd_squared(dim, 4);
            s.report.term_counts.push_back({la.target, dim, count_terms(la), 4 * dim + 1, count_matrix_terms(la)});
            s.report.term_counts.push_back(
                {la2.target, dim, count_terms(la2), 12 * dim * dim, count_matrix_terms(la2)});
        }
    }

    // Circuit estimators against dense brackets.
    {
        const auto dir = decompose_dirichlet_1d(8);
        const auto uni = decompose_unified_1d(8, unit(s.rng), unit(s.rng));
        for (const TermList *l : {&dir.a, &dir.a_squared, &uni.a, &uni.a_squared}) {
            s.estimator_check(*l, 3);
        }
        s.estimator_check(decompose_dirichlet_dd(2, 4), 2);
        s.estimator_check(decompose_dirichlet_dd_squared(2, 4), 2);
    }

    // QFT and phase tower realizations.
    {
        double worst = 0.0;
        for (unsigned q = 1; q <= 5; q++) {
            worst = std::max(worst, max_error(qft_circuit(q).to_dense(), dft_matrix(std::size_t{1} << q)));
        }
        s.check("qft matches dft_matrix, 1..5 qubits", worst, 1e-12);
        worst = 0.0;
        for (unsigned q = 1; q <= 5; q++) {
            const std::size_t n = std::size_t{1} << q;
            for (long l = -static_cast<long>(n); l <= static_cast<long>(n); l++) {
                const PhaseSpectrum ps = phase_spectrum(n, l);
                worst = std::max(worst, max_error(phase_tower_circuit(ps).to_dense(), ps.to_dense()));
            }
        }
        s.check("phase tower matches D^l, 1..5 qubits, l in [-n, n]", worst, 1e-12);
        worst = 0.0;
        for (unsigned q = 1; q <= 4; q++) {
            const std::size_t n = std::size_t{1} << q;
            const DenseMatrix down = build_unit_circulant(n, ShiftDirection::kDown);
            for (long l = -static_cast<long>(n); l <= static_cast<long>(n); l++) {
                const DenseMatrix want = l >= 0 ? matrix_power(down, static_cast<unsigned>(l))
                                                : matrix_power(down.adjoint(), static_cast<unsigned>(-l));
                worst = std::max(worst, max_error(shift_circuit(n, l).to_dense(), want));
            }
        }
        s.check("shift circuit matches L^l, 1..4 qubits", worst, 1e-12);
    }

    // Cost assembly against the dense Hamiltonian.
    {
        std::vector<PoissonProblem> problems(3);
        problems[0].qubits_per_axis = 3;
        problems[1].qubits_per_axis = 3;
        problems[1].boundary = BoundaryCondition::unified(1.0 + unit(s.rng), 1.0 + unit(s.rng), unit(s.rng), unit(s.rng));
        problems[2].dimension = 2;
        problems[2].qubits_per_axis = 2;
        std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
        for (const auto &p : problems) {
            const auto lists = decompose_problem(p);
            const DenseMatrix a = build_poisson_matrix(p);
            const StateVector b = prepare_b(p);
            const AnsatzSpec ansatz{p.total_qubits(), 2};
            double worst = 0.0;
            for (int t = 0; t < 5; t++) {
                Parameters th(ansatz.parameter_count());
                for (auto &x : th) {
                    x = angle(s.rng);
                }
                const double circ = cost_linear_system(p, lists, ansatz, th, ExactMode{}).cost;
                worst = std::max(worst, std::abs(circ - dense_system_cost(a, b, ansatz_state(ansatz, th))));
            }
            s.check("cost equivalence " + lists.a.target, worst, 1e-10);
        }
    }
    return s.report;
}

int cmd_verify(const RunOptions &options, std::ostream &log, std::ostream &err) {
    return guarded(err, [&] {
        const Json config = load_config(options);
        const std::uint64_t seed = resolve_seed(options, config);
        std::optional<FaultInjection> fault;
        if (config.contains("inject_fault")) {
            const Json &f = config.at("inject_fault");
            fault = FaultInjection{f.at("list").get<std::string>(), f.value("term", std::size_t{0}),
                                   f.value("delta", 0.5)};
        }
        const fs::path dir = prepare_out(options);
        const VerifyReport report = run_verify_suite(seed, fault);
        write_text(dir / "verify-report.json", report.to_json().dump(2) + "\n");
        for (const auto &c : report.checks) {
            if (!c.pass) {
                err << "FAIL " << c.name << ": max error " << c.max_error << " > " << c.tolerance << "\n";
            }
        }
        for (const auto &r : report.term_counts) {
            log << r.family << ": " << r.count << " brackets (expected " << r.expected << ")\n";
        }
        const bool ok = report.all_pass();
        log << (ok ? "all checks passed" : "verification failed") << " (" << report.checks.size() << " checks)\n";
        return ok ? kExitOk : kExitVerifyFail;
    });
}

}  // namespace pvqa
