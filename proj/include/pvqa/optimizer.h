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

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "pvqa/ansatz.h"
#include "pvqa/circuit.h"

namespace pvqa {

enum class OptimizerMethod { kNelderMead, kSpsa };

std::string_view method_name(OptimizerMethod m);
OptimizerMethod method_from_name(std::string_view name);

struct OptimizerConfig {
    OptimizerMethod method = OptimizerMethod::kNelderMead;
    unsigned max_iters = 2000;
    unsigned restarts = 5;
    std::uint64_t seed = 0;
    EstimationMode cost_mode = ExactMode{};
    /// Stop once the best cost improved by less than `tolerance` over the
    /// last `patience` iterations.
    double tolerance = 1e-8;
    unsigned patience = 50;
    /// Initial simplex edge (Nelder-Mead) or perturbation size c (SPSA).
    double step = 0.5;
    /// SPSA gain a.
    double spsa_gain = 0.2;

    void validate() const;
};

struct TraceRecord {
    unsigned iteration = 0;
    unsigned restart = 0;
    /// Best cost seen so far in this restart.
    double cost = 0.0;
    std::optional<double> fidelity;
};

struct TrainingTrace {
    std::vector<TraceRecord> records;
    Parameters best_parameters;
    double best_cost = 0.0;
    unsigned best_restart = 0;
    std::vector<double> restart_best_costs;
    std::size_t evaluations = 0;

    /// Columns iteration, restart, cost, fidelity (blank when unknown).
    void write_csv(std::ostream &out) const;
};

using CostFunction = std::function<double(const Parameters &)>;
using FidelityFunction = std::function<double(const Parameters &)>;

/// Runs config.restarts independent optimizations from uniform random starts
/// in [0, 2 pi) and keeps the global best. When `fidelity` is set, every
/// record carries the fidelity of that restart's best parameters.
TrainingTrace optimize(const CostFunction &cost, const AnsatzSpec &spec, const OptimizerConfig &config,
                       const FidelityFunction &fidelity = {});

/// Minimizes from one given start; `restart` only labels the records.
TrainingTrace optimize_from(const CostFunction &cost, Parameters start, const OptimizerConfig &config,
                            const FidelityFunction &fidelity = {}, unsigned restart = 0,
                            std::uint64_t spsa_seed = 0);

}  // namespace pvqa
