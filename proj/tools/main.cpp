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
 * @file main.cpp
 * The qreason command line: run inference, train, cross-check gradients,
 * inspect programs and states, export problems.
 *
 * Exit codes: 0 success, 1 input error, 2 resource cap exceeded,
 * 3 gradient-check failure. With --format json, stdout carries exactly
 * one JSON document; every diagnostic goes to stderr.
 */

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qreason/circuit.hpp"
#include "qreason/errors.hpp"
#include "qreason/io.hpp"
#include "qreason/parser.hpp"
#include "qreason/problem.hpp"
#include "qreason/readout.hpp"
#include "qreason/statevector.hpp"
#include "qreason/train.hpp"
#include "qreason/util.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitGradCheck = 3;

/// Raised for CLI-level input problems that map to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string problem_path;
    std::string format = "text";
    std::size_t top_k = 4;
    std::size_t max_qubits = qreason::kQubitCap;
    bool no_final_mix = false;
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
    // `--h` (finite-difference step) would collide with the default `-h`.
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("problem", opts.problem_path, "Problem file (.qrp)")
        ->required();
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--top-k", opts.top_k,
                    "Number of basis assignments reported");
    cmd->add_option("--max-qubits", opts.max_qubits,
                    "Override the proposition-count cap");
    cmd->add_flag("--no-final-mix", opts.no_final_mix,
                  "Skip the mixing block of the last layer");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Parses the problem, printing one diagnostic per line on failure.
/// The qubit cap is checked separately so it maps to exit code 2.
qreason::ProblemSpec load_problem(const CommonOptions &opts) {
    const std::string text = read_file(opts.problem_path);
    auto result =
        qreason::parse(text, std::numeric_limits<std::size_t>::max());
    if (!result.ok()) {
        for (const auto &error : result.errors) {
            std::cerr << opts.problem_path << ":"
                      << qreason::format_error(error) << "\n";
        }
        throw InputError("problem file does not parse");
    }
    if (result.spec->num_qubits() > opts.max_qubits) {
        throw qreason::ResourceError(
            std::to_string(result.spec->num_qubits()) +
            " propositions exceed the qubit cap of " +
            std::to_string(opts.max_qubits));
    }
    return std::move(*result.spec);
}

qreason::CompileOptions compile_options(const CommonOptions &opts) {
    qreason::CompileOptions compile;
    compile.final_mix = !opts.no_final_mix;
    return compile;
}

std::string report_to_csv(const qreason::ReadoutReport &report) {
    std::ostringstream out;
    out << "kind,key,value\n";
    for (const auto &nv : report.y_hat) {
        out << "y_hat," << nv.name << "," << qreason::format_double(nv.value)
            << "\n";
    }
    for (const auto &nv : report.z) {
        out << "z," << nv.name << "," << qreason::format_double(nv.value)
            << "\n";
    }
    for (const auto &pv : report.zz) {
        out << "zz," << pv.first_name << ";" << pv.second_name << ","
            << qreason::format_double(pv.value) << "\n";
    }
    for (const auto &ba : report.top_k) {
        out << "top_k," << ba.bits << ","
            << qreason::format_double(ba.probability) << "\n";
    }
    return out.str();
}

int cmd_run(const CommonOptions &opts) {
    const auto spec = load_problem(opts);
    const auto program =
        qreason::compile(spec, compile_options(opts), opts.max_qubits);
    const auto state = qreason::forward(
        program,
        qreason::prepare_from_features(spec.prior_vector(), opts.max_qubits));
    const auto report = qreason::make_report(state, spec, opts.top_k);
    if (opts.format == "json") {
        std::cout << qreason::report_to_json(report).dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << report_to_csv(report);
    } else {
        std::cout << qreason::report_to_text(report);
    }
    return kExitOk;
}

struct TrainOptions {
    CommonOptions common;
    qreason::TrainConfig config;
    std::string optimizer = "adam";
    std::string grad = "adjoint";
    std::string trace_path;
    std::string params_path;
};

int cmd_train(TrainOptions &opts) {
    const auto spec = load_problem(opts.common);
    if (spec.targets.empty()) {
        throw InputError("problem declares no targets; nothing to train");
    }
    opts.config.compile = compile_options(opts.common);
    opts.config.max_qubits = opts.common.max_qubits;
    opts.config.optimizer = opts.optimizer == "sgd"
                                ? qreason::OptimizerKind::Sgd
                                : qreason::OptimizerKind::Adam;
    if (opts.grad == "shift") {
        opts.config.method = qreason::GradMethod::ParameterShift;
    } else if (opts.grad == "fd") {
        opts.config.method = qreason::GradMethod::FiniteDifference;
    } else {
        opts.config.method = qreason::GradMethod::Adjoint;
    }

    const auto result = qreason::train(spec, opts.config);
    const auto state = qreason::forward(result.program, result.initial_state);
    const auto report = qreason::make_report(state, spec, opts.common.top_k);

    if (!opts.trace_path.empty()) {
        std::ofstream out(opts.trace_path, std::ios::binary);
        if (!out) {
            throw InputError("cannot write '" + opts.trace_path + "'");
        }
        out << qreason::trace_to_csv(result.trace);
    }
    if (!opts.params_path.empty()) {
        std::ofstream out(opts.params_path, std::ios::binary);
        if (!out) {
            throw InputError("cannot write '" + opts.params_path + "'");
        }
        out << qreason::params_to_json(result.program.params).dump(2) << "\n";
    }

    if (opts.common.format == "json") {
        std::cout << qreason::train_result_to_json(result, report).dump(2)
                  << "\n";
    } else if (opts.common.format == "csv") {
        std::cout << qreason::trace_to_csv(result.trace);
    } else {
        std::cout << "final_loss = " << qreason::format_double(result.final_loss)
                  << "\n";
        std::cout << "epochs_run = " << result.epochs_run()
                  << (result.converged ? " (converged)" : "") << "\n";
        for (const auto &[qubit, value] : spec.target_map()) {
            std::cout << "y_hat " << spec.propositions[qubit].name << " = "
                      << qreason::format_double(
                             qreason::truth_probability(state, qubit))
                      << " (target " << value << ")\n";
        }
    }
    return kExitOk;
}

struct GradCheckOptions {
    CommonOptions common;
    double fd_step = qreason::kDefaultFdStep;
};

/// Componentwise adjoint-vs-fd acceptance: relative error within 1e-5,
/// with a 1e-7 absolute floor for near-zero components.
bool grad_components_agree(double adjoint, double fd) {
    const double diff = std::abs(adjoint - fd);
    const double scale = std::max(std::abs(adjoint), std::abs(fd));
    return diff <= 1e-7 || diff <= 1e-5 * scale;
}

int cmd_grad_check(const GradCheckOptions &opts) {
    const auto spec = load_problem(opts.common);
    if (spec.targets.empty()) {
        throw InputError("problem declares no targets; nothing to check");
    }
    const auto program =
        qreason::compile(spec, compile_options(opts.common),
                         opts.common.max_qubits);
    const auto init = qreason::prepare_from_features(spec.prior_vector(),
                                                     opts.common.max_qubits);
    const auto targets = spec.target_map();

    const auto adjoint = qreason::grad_adjoint(program, init, targets);
    const auto shift = qreason::grad_parameter_shift(program, init, targets);
    const auto fd = qreason::grad_finite_difference(program, init, targets,
                                                    opts.fd_step);

    bool pass = true;
    qreason::Json rows = qreason::Json::array();
    std::ostringstream table;
    table << "parameter adjoint shift fd rel_diff\n";
    for (std::size_t p = 0; p < program.params.size(); ++p) {
        const double a = adjoint.gradient[p];
        const double s = shift.gradient[p];
        const double f = fd.gradient[p];
        const double scale = std::max({std::abs(a), std::abs(f), 1e-300});
        const double rel = std::abs(a - f) / scale;
        pass = pass && grad_components_agree(a, f);
        const std::string &name = program.params.info(p).name;
        rows.push_back({{"parameter", name},
                        {"adjoint", a},
                        {"shift", s},
                        {"fd", f},
                        {"rel_diff", rel}});
        table << name << " " << qreason::format_double(a) << " "
              << qreason::format_double(s) << " " << qreason::format_double(f)
              << " " << qreason::format_double(rel) << "\n";
    }

    if (opts.common.format == "json") {
        qreason::Json doc;
        doc["rows"] = std::move(rows);
        doc["loss"] = adjoint.loss;
        doc["pass"] = pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << table.str();
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitGradCheck;
}

struct InspectOptions {
    CommonOptions common;
    bool program = false;
    bool amplitudes = false;
    long long layer = -1; // -1: full evolution; 0: initial state
};

int cmd_inspect(const InspectOptions &opts) {
    const auto spec = load_problem(opts.common);
    const auto program =
        qreason::compile(spec, compile_options(opts.common),
                         opts.common.max_qubits);

    const bool want_state = opts.amplitudes || opts.layer >= 0;
    const bool want_program = opts.program || !want_state;

    qreason::Statevector state(std::max<std::size_t>(spec.num_qubits(), 1));
    if (want_state) {
        if (opts.layer >
            static_cast<long long>(program.num_layers())) {
            throw InputError("layer " + std::to_string(opts.layer) +
                             " out of range; circuit has " +
                             std::to_string(program.num_layers()) +
                             " layers");
        }
        const std::size_t layers =
            opts.layer < 0 ? program.num_layers()
                           : static_cast<std::size_t>(opts.layer);
        state = qreason::forward_layers(
            program,
            qreason::prepare_from_features(spec.prior_vector(),
                                           opts.common.max_qubits),
            layers);
    }

    if (opts.common.format == "json") {
        qreason::Json doc;
        if (want_program) {
            qreason::Json lines = qreason::Json::array();
            std::istringstream in(qreason::dump_program(program));
            for (std::string line; std::getline(in, line);) {
                lines.push_back(line);
            }
            doc["program"] = std::move(lines);
        }
        if (want_state) {
            doc["amplitudes"] = qreason::amplitudes_to_json(state);
        }
        std::cout << doc.dump(2) << "\n";
    } else if (opts.common.format == "csv") {
        if (want_program) {
            std::cout << qreason::dump_program(program);
        }
        if (want_state) {
            std::cout << qreason::amplitudes_to_csv(state);
        }
    } else {
        if (want_program) {
            std::cout << qreason::dump_program(program);
        }
        if (want_state) {
            std::cout << qreason::amplitudes_to_csv(state);
        }
    }
    return kExitOk;
}

int cmd_export(const CommonOptions &opts) {
    const auto spec = load_problem(opts);
    if (opts.format == "csv") {
        throw InputError("export supports json and text formats only");
    }
    if (opts.format == "text") {
        std::cout << qreason::serialize(spec);
    } else {
        std::cout << qreason::problem_to_json(spec).dump(2) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Differentiable logic circuits over exact statevectors"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    CommonOptions run_opts;
    CLI::App *run = app.add_subcommand("run", "Prepare, evolve, read out");
    add_common(run, run_opts);

    TrainOptions train_opts;
    CLI::App *train = app.add_subcommand("train", "Optimize parameters");
    add_common(train, train_opts.common);
    train->add_option("--epochs", train_opts.config.epochs, "Epoch cap");
    train->add_option("--lr", train_opts.config.learning_rate,
                      "Learning rate");
    train->add_option("--optimizer", train_opts.optimizer, "Optimizer")
        ->check(CLI::IsMember({"adam", "sgd"}));
    train->add_option("--grad", train_opts.grad, "Gradient method")
        ->check(CLI::IsMember({"adjoint", "shift", "fd"}));
    train->add_option("--seed", train_opts.config.seed,
                      "Mixing-jitter RNG seed");
    train->add_option("--threshold", train_opts.config.loss_threshold,
                      "Early-stop loss threshold");
    train->add_option("--h", train_opts.config.fd_step,
                      "Finite-difference step (with --grad fd)");
    train->add_option("--trace", train_opts.trace_path,
                      "Write the epoch trace as CSV");
    train->add_option("--save-params", train_opts.params_path,
                      "Write final parameters as JSON");

    GradCheckOptions grad_opts;
    CLI::App *grad_check = app.add_subcommand(
        "grad-check", "Compare adjoint, parameter-shift and fd gradients");
    add_common(grad_check, grad_opts.common);
    grad_check->add_option("--h", grad_opts.fd_step, "Finite-difference step");

    InspectOptions inspect_opts;
    CLI::App *inspect =
        app.add_subcommand("inspect", "Dump programs and statevectors");
    add_common(inspect, inspect_opts.common);
    inspect->add_flag("--program", inspect_opts.program,
                      "Dump the compiled gate list");
    inspect->add_flag("--amplitudes", inspect_opts.amplitudes,
                      "Dump the evolved statevector");
    inspect->add_option("--layer", inspect_opts.layer,
                        "Dump the state after this block (0 = initial)");

    CommonOptions export_opts;
    export_opts.format = "json";
    CLI::App *export_cmd =
        app.add_subcommand("export", "Emit the problem as JSON or text");
    add_common(export_cmd, export_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help and friends
        }
        app.exit(e);
        return kExitInput;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_opts);
        }
        if (train->parsed()) {
            return cmd_train(train_opts);
        }
        if (grad_check->parsed()) {
            return cmd_grad_check(grad_opts);
        }
        if (inspect->parsed()) {
            return cmd_inspect(inspect_opts);
        }
        if (export_cmd->parsed()) {
            return cmd_export(export_opts);
        }
    } catch (const qreason::ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
