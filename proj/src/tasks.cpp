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

#include "qreason/tasks.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qreason/errors.hpp"
#include "qreason/parser.hpp"
#include "qreason/readout.hpp"

namespace qreason {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool compare(const std::string &op, double actual, double expected) {
    if (op == "<=") {
        return actual <= expected;
    }
    if (op == ">=") {
        return actual >= expected;
    }
    if (op == "<") {
        return actual < expected;
    }
    if (op == ">") {
        return actual > expected;
    }
    if (op == "~") {
        return std::abs(actual - expected) <= 0.1 * std::abs(expected);
    }
    throw DomainError("unknown comparator '" + op + "'");
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = s.find(sep, start);
        parts.push_back(s.substr(start, dot - start));
        if (dot == std::string::npos) {
            return parts;
        }
        start = dot + 1;
    }
}

std::size_t require_index(const ProblemSpec &spec, const std::string &name) {
    auto idx = spec.index_of(name);
    if (!idx) {
        throw DomainError("unknown proposition '" + name + "'");
    }
    return *idx;
}

/// Everything a metric may draw on, computed once per case.
struct CaseOutcome {
    TrainResult result;
    Statevector final_state;
};

CaseOutcome run_case(const TaskCase &task) {
    if (task.problem.targets.empty()) {
        // No targets: plain evaluation at the declared parameters.
        TrainResult result{
            compile(task.problem, task.config.compile, task.config.max_qubits),
            prepare_from_features(task.problem.prior_vector(),
                                  task.config.max_qubits),
            {},
            0.0,
            false};
        Statevector final_state = forward(result.program, result.initial_state);
        return {std::move(result), std::move(final_state)};
    }
    TrainResult result = train(task.problem, task.config);
    Statevector final_state = forward(result.program, result.initial_state);
    return {std::move(result), std::move(final_state)};
}

double evaluate_metric(const TaskCase &task, const CaseOutcome &outcome,
                       const std::string &metric) {
    if (metric == "final_loss") {
        return outcome.result.final_loss;
    }
    if (metric == "epochs_run") {
        return static_cast<double>(outcome.result.epochs_run());
    }
    if (metric == "witness") {
        const auto pairs = task.problem.pair_queries();
        return entanglement_witness(outcome.final_state, pairs);
    }
    if (metric == "loss_gap_vs_depth1") {
        ProblemSpec shallow = task.problem;
        shallow.layers = 1;
        const TrainResult depth1 = train(shallow, task.config);
        return depth1.final_loss - outcome.result.final_loss;
    }
    const auto parts = split(metric, '.');
    if (parts.size() == 2 && parts[0] == "y_hat") {
        return truth_probability(outcome.final_state,
                                 require_index(task.problem, parts[1]));
    }
    if (parts.size() == 3 && parts[0] == "joint_p11") {
        const std::size_t qubits[] = {require_index(task.problem, parts[1]),
                                      require_index(task.problem, parts[2])};
        return joint_probability(outcome.final_state, qubits);
    }
    throw DomainError("unknown metric '" + metric + "'");
}

} // namespace

bool SuiteReport::all_passed() const {
    for (const auto &c : cases) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

std::vector<TaskCase> load_tasks(const std::string &dir) {
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file(dir + "/manifest.json"));
    } catch (const nlohmann::json::exception &e) {
        throw DomainError("malformed manifest: " + std::string(e.what()));
    }

    std::vector<TaskCase> cases;
    for (const auto &entry : manifest.at("tasks")) {
        TaskCase task;
        task.name = entry.at("name").get<std::string>();
        task.file = entry.at("file").get<std::string>();

        if (entry.contains("config")) {
            const auto &cfg = entry["config"];
            if (cfg.contains("epochs")) {
                task.config.epochs = cfg["epochs"].get<std::size_t>();
            }
            if (cfg.contains("lr")) {
                task.config.learning_rate = cfg["lr"].get<double>();
            }
            if (cfg.contains("seed")) {
                task.config.seed = cfg["seed"].get<std::uint64_t>();
            }
        }

        auto parsed = parse(read_file(dir + "/" + task.file));
        if (!parsed.ok()) {
            throw DomainError("task '" + task.name + "' does not parse: " +
                              format_error(parsed.errors.front()));
        }
        task.problem = std::move(*parsed.spec);

        for (const auto &check : entry.at("checks")) {
            task.checks.push_back({check.at("metric").get<std::string>(),
                                   check.at("op").get<std::string>(),
                                   check.at("value").get<double>()});
        }
        cases.push_back(std::move(task));
    }
    return cases;
}

SuiteReport run_suite(const std::vector<TaskCase> &cases,
                      const std::string &filter) {
    SuiteReport report;
    for (const TaskCase &task : cases) {
        if (!filter.empty() && task.name.find(filter) == std::string::npos) {
            continue;
        }
        CaseReport cr;
        cr.name = task.name;
        cr.passed = true;
        const auto start = std::chrono::steady_clock::now();
        const CaseOutcome outcome = run_case(task);
        for (const CheckSpec &check : task.checks) {
            CheckResult result;
            result.check = check;
            try {
                result.actual = evaluate_metric(task, outcome, check.metric);
                result.passed = compare(check.op, result.actual, check.value);
            } catch (const std::exception &e) {
                result.actual = std::nan("");
                result.passed = false;
                result.note = e.what();
            }
            cr.passed = cr.passed && result.passed;
            cr.checks.push_back(std::move(result));
        }
        cr.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        report.cases.push_back(std::move(cr));
    }
    return report;
}

double entanglement_witness(
    const Statevector &state,
    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    if (pairs.empty()) {
        throw DomainError("entanglement witness requires a pair query");
    }
    double best = 0.0;
    for (const auto &[i, j] : pairs) {
        const double zz = zz_correlation(state, i, j);
        const double zi = z_expectation(state, i);
        const double zj = z_expectation(state, j);
        best = std::max(best, std::abs(zz - zi * zj));
    }
    return best;
}

double entanglement_witness(const ProblemSpec &spec) {
    const auto pairs = spec.pair_queries();
    if (pairs.empty()) {
        throw DomainError("entanglement witness requires a pair query");
    }
    const CircuitProgram program = compile(spec);
    const Statevector state =
        forward(program, prepare_from_features(spec.prior_vector()));
    return entanglement_witness(state, pairs);
}

} // namespace qreason
