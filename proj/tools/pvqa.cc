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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pvqa/commands.h"

namespace {

void add_run_flags(CLI::App *cmd, pvqa::RunOptions &o) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--seed", o.seed, "master seed (default 0)");
    cmd->add_option("--shots", o.shots, "shots per circuit, or 'exact'");
    cmd->add_option("--restarts", o.restarts, "random restarts")->check(CLI::PositiveNumber);
    cmd->add_option("--depth", o.depth, "ansatz layers")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out_dir, "output directory");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variational solver for Poisson and banded Toeplitz problems"};
    app.require_subcommand(1);
    pvqa::RunOptions options;

    auto *solve = app.add_subcommand("solve-poisson", "optimize the ansatz for a Poisson problem");
    add_run_flags(solve, options);

    auto *toeplitz = app.add_subcommand("toeplitz", "banded Toeplitz linear system or matrix-vector product");
    toeplitz->require_subcommand(1);
    auto *tsolve = toeplitz->add_subcommand("solve", "solve T x = b");
    auto *tmatvec = toeplitz->add_subcommand("matvec", "prepare T v0 / ||T v0||");
    add_run_flags(tsolve, options);
    add_run_flags(tmatvec, options);

    auto *verify = app.add_subcommand("verify", "run the decomposition and circuit checks");
    add_run_flags(verify, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pvqa::kExitConfig;
    }

    if (solve->parsed()) {
        return pvqa::cmd_solve_poisson(options, std::cout, std::cerr);
    }
    if (tsolve->parsed()) {
        return pvqa::cmd_toeplitz(options, pvqa::ToeplitzTask::kSolve, std::cout, std::cerr);
    }
    if (tmatvec->parsed()) {
        return pvqa::cmd_toeplitz(options, pvqa::ToeplitzTask::kMatvec, std::cout, std::cerr);
    }
    return pvqa::cmd_verify(options, std::cout, std::cerr);
}
