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

#include "pvqa/optimizer.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "pvqa/error.h"

namespace pvqa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
    double w = std::fmod(x, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    return w >= kTwoPi ? 0.0 : w;
}

// Tracks best-so-far values and the stagnation window.
class Recorder {
   public:
    Recorder(const CostFunction &cost, const OptimizerConfig &config, const FidelityFunction &fidelity,
             unsigned restart, TrainingTrace &trace)
        : cost_(cost), config_(config), fidelity_(fidelity), restart_(restart), trace_(trace) {
    }

    double eval(const Parameters &p) {
        const double v = cost_(p);
        trace_.evaluations++;
        if (v < best_) {
            best_ = v;
            best_params_ = p;
        }
        return v;
    }

    // Records iteration `it`; true when the run should stop.
    bool record(unsigned it) {
        TraceRecord rec{it, restart_, best_, std::nullopt};
        if (fidelity_) {
            rec.fidelity = fidelity_(best_params_);
        }
        trace_.records.push_back(rec);
        history_.push_back(best_);
        if (history_.size() > config_.patience) {
            const double old = history_[history_.size() - 1 - config_.patience];
            if (old - best_ < config_.tolerance) {
                return true;
            }
        }
        return false;
    }

    double best() const {
        return best_;
    }
    const Parameters &best_params() const {
        return best_params_;
    }

   private:
    const CostFunction &cost_;
    const OptimizerConfig &config_;
    const FidelityFunction &fidelity_;
    unsigned restart_;
    TrainingTrace &trace_;
    double best_ = std::numeric_limits<double>::infinity();
    Parameters best_params_;
    std::vector<double> history_;
};

void nelder_mead(Recorder &rec, const Parameters &start, const OptimizerConfig &config) {
    const std::size_t dim = start.size();
    std::vector<Parameters> simplex(dim + 1, start);
    for (std::size_t i = 0; i < dim; i++) {
        simplex[i + 1][i] += config.step;
    }
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; i++) {
        values[i] = rec.eval(simplex[i]);
    }
    if (rec.record(0) || dim == 0) {
        return;
    }
    std::vector<std::size_t> order(dim + 1);
    for (unsigned it = 1; it <= config.max_iters; it++) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[dim - 1];
        Parameters centroid(dim, 0.0);
        for (std::size_t k = 0; k < dim; k++) {
            const std::size_t idx = order[k];
            for (std::size_t i = 0; i < dim; i++) {
                centroid[i] += simplex[idx][i] / static_cast<double>(dim);
            }
        }
        auto along = [&](double t) {
            Parameters p(dim);
            for (std::size_t i = 0; i < dim; i++) {
                p[i] = centroid[i] + t * (simplex[worst][i] - centroid[i]);
            }
            return p;
        };
        Parameters reflected = along(-1.0);
        const double fr = rec.eval(reflected);
        if (fr < values[best]) {
            Parameters expanded = along(-2.0);
            const double fe = rec.eval(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
        } else if (fr < values[second]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
        } else {
            const bool outside = fr < values[worst];
            Parameters contracted = along(outside ? -0.5 : 0.5);
            const double fc = rec.eval(contracted);
            if (fc < (outside ? fr : values[worst])) {
                simplex[worst] = std::move(contracted);
                values[worst] = fc;
            } else {
                for (std::size_t k = 1; k <= dim; k++) {
                    const std::size_t idx = order[k];
                    for (std::size_t i = 0; i < dim; i++) {
                        simplex[idx][i] = simplex[best][i] + 0.5 * (simplex[idx][i] - simplex[best][i]);
                    }
                    values[idx] = rec.eval(simplex[idx]);
                }
            }
        }
        if (rec.record(it)) {
            return;
        }
    }
}

void spsa(Recorder &rec, Parameters theta, const OptimizerConfig &config, std::uint64_t seed) {
    const std::size_t dim = theta.size();
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    const double big_a = 0.1 * config.max_iters;
    rec.eval(theta);
    if (rec.record(0)) {
        return;
    }
    std::vector<double> delta(dim);
    for (unsigned it = 1; it <= config.max_iters; it++) {
        const double k = it - 1;
        const double ak = config.spsa_gain / std::pow(k + 1.0 + big_a, 0.602);
        const double ck = config.step / std::pow(k + 1.0, 0.101);
        Parameters plus = theta, minus = theta;
        for (std::size_t i = 0; i < dim; i++) {
            delta[i] = coin(rng) ? 1.0 : -1.0;
            plus[i] += ck * delta[i];
            minus[i] -= ck * delta[i];
        }
        const double diff = (rec.eval(plus) - rec.eval(minus)) / (2.0 * ck);
        for (std::size_t i = 0; i < dim; i++) {
            theta[i] -= ak * diff * delta[i];
        }
        rec.eval(theta);
        if (rec.record(it)) {
            return;
        }
    }
}

}  // namespace

std::string_view method_name(OptimizerMethod m) {
    return m == OptimizerMethod::kNelderMead ? "nelder-mead" : "spsa";
}

OptimizerMethod method_from_name(std::string_view name) {
    if (name == "nelder-mead" || name == "simplex" || name == "derivative-free-simplex") {
        return OptimizerMethod::kNelderMead;
    }
    if (name == "spsa") {
        return OptimizerMethod::kSpsa;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown optimizer '" + std::string(name) + "'");
}

void OptimizerConfig::validate() const {
    if (restarts < 1) {
        throw Error(ErrorCode::kInvalidArgument, "restarts must be at least 1");
    }
    if (patience < 1 || !(tolerance >= 0.0) || !(step > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "invalid stopping rule or step size");
    }
    if (const auto *shots = std::get_if<ShotMode>(&cost_mode); shots && shots->shots == 0) {
        throw Error(ErrorCode::kShotCountZero, "shot mode needs at least one shot");
    }
}

void TrainingTrace::write_csv(std::ostream &out) const {
    out << "iteration,restart,cost,fidelity\n";
    const auto old = out.precision(17);
    for (const auto &r : records) {
        out << r.iteration << ',' << r.restart << ',' << r.cost << ',';
        if (r.fidelity) {
            out << *r.fidelity;
        }
        out << '\n';
    }
    out.precision(old);
}

TrainingTrace optimize_from(const CostFunction &cost, Parameters start, const OptimizerConfig &config,
                            const FidelityFunction &fidelity, unsigned restart, std::uint64_t spsa_seed) {
    config.validate();
    TrainingTrace trace;
    Recorder rec(cost, config, fidelity, restart, trace);
    if (config.method == OptimizerMethod::kNelderMead) {
        nelder_mead(rec, start, config);
    } else {
        spsa(rec, std::move(start), config, spsa_seed);
    }
    trace.best_cost = rec.best();
    trace.best_parameters = rec.best_params();
    for (auto &p : trace.best_parameters) {
        p = wrap_angle(p);
    }
    trace.best_restart = restart;
    trace.restart_best_costs = {rec.best()};
    return trace;
}

TrainingTrace optimize(const CostFunction &cost, const AnsatzSpec &spec, const OptimizerConfig &config,
                       const FidelityFunction &fidelity) {
    config.validate();
    spec.validate();
    TrainingTrace out;
    out.best_cost = std::numeric_limits<double>::infinity();
    for (unsigned r = 0; r < config.restarts; r++) {
        std::mt19937_64 rng(derive_seed(config.seed, r));
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        Parameters start(spec.parameter_count());
        for (auto &p : start) {
            p = angle(rng);
        }
        TrainingTrace run = optimize_from(cost, std::move(start), config, fidelity, r, derive_seed(config.seed, r + 0x5151));
        out.records.insert(out.records.end(), run.records.begin(), run.records.end());
        out.restart_best_costs.push_back(run.best_cost);
        out.evaluations += run.evaluations;
        if (run.best_cost < out.best_cost) {
            out.best_cost = run.best_cost;
            out.best_parameters = std::move(run.best_parameters);
            out.best_restart = r;
        }
    }
    return out;
}

}  // namespace pvqa
