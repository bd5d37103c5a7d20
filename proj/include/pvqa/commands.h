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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pvqa/serialize.h"

namespace pvqa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitZeroImage = 4;

/// Command-line overrides; unset fields fall back to the config file, then defaults.
struct RunOptions {
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> shots;
    std::optional<unsigned> restarts;
    std::optional<unsigned> depth;
    std::string out_dir = ".";
};

enum class ToeplitzTask { kSolve, kMatvec };

int cmd_solve_poisson(const RunOptions &options, std::ostream &log, std::ostream &err);
int cmd_toeplitz(const RunOptions &options, ToeplitzTask task, std::ostream &log, std::ostream &err);
int cmd_verify(const RunOptions &options, std::ostream &log, std::ostream &err);

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct TermCountRow {
    std::string family;
    unsigned dimension = 1;
    std::size_t count = 0;
    std::size_t expected = 0;
    std::size_t matrix_terms = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<TermCountRow> term_counts;

    bool all_pass() const;
    Json to_json() const;
};

/// Deliberate coefficient error for exercising the failure path.
struct FaultInjection {
    std::string target;  // TermList::target to corrupt
    std::size_t term = 0;
    double delta = 0.0;
};

VerifyReport run_verify_suite(std::uint64_t seed, const std::optional<FaultInjection> &fault = std::nullopt);

}  // namespace pvqa
