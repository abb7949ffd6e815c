// Copyright 2026 The qreason Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file tasks.hpp
 * Bundled reference problems with pinned quantitative checks.
 *
 * A task directory holds `.qrp` files plus a `manifest.json` describing,
 * per case, the training configuration and a list of metric checks. The
 * suite runner trains cases that declare targets (plain evaluation
 * otherwise), computes the requested metrics, and reports pass/fail per
 * check. Check failures are report entries, never exceptions.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qreason/problem.hpp"
#include "qreason/statevector.hpp"
#include "qreason/train.hpp"

namespace qreason {

/**
 * @brief One metric assertion: `metric op value`.
 *
 * Supported metrics: final_loss, epochs_run, witness, y_hat.NAME,
 * joint_p11.NAME.NAME, loss_gap_vs_depth1 (final loss of a depth-1
 * variant minus the case's own final loss). Operators: <=, >=, <, > and
 * `~` (within 10% of `value`, the pinned-baseline regression window).
 */
struct CheckSpec {
    std::string metric;
    std::string op;
    double value = 0.0;
};

struct TaskCase {
    std::string name;
    std::string file;
    ProblemSpec problem;
    TrainConfig config;
    std::vector<CheckSpec> checks;
};

struct CheckResult {
    CheckSpec check;
    double actual = 0.0;
    bool passed = false;
    std::string note; // non-empty when the metric could not be evaluated
};

struct CaseReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool passed = false;
    double seconds = 0.0;
};

struct SuiteReport {
    std::vector<CaseReport> cases;
    [[nodiscard]] bool all_passed() const;
};

/// Loads `manifest.json` from `dir` and parses each referenced problem.
/// Throws DomainError on a missing or malformed manifest or problem file.
std::vector<TaskCase> load_tasks(const std::string &dir);

/// Runs every case whose name contains `filter` (all when empty).
SuiteReport run_suite(const std::vector<TaskCase> &cases,
                      const std::string &filter = "");

/// max over `pairs` of |<Z_i Z_j> - <Z_i><Z_j>| on a given state.
double entanglement_witness(
    const Statevector &state,
    std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Witness of the problem as declared: compile with initial parameters,
/// evolve the prior state, take the maximum over the problem's pair
/// queries. Throws DomainError when no pair query exists.
double entanglement_witness(const ProblemSpec &spec);

} // namespace qreason
