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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "qreason/parser.hpp"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

/// Runs the installed CLI through the shell and captures stdout.
CliResult run_cli(const std::string &args) {
    const std::string cmd = std::string(QREASON_CLI_PATH) + " " + args;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + cmd);
    }
    std::string out;
    char buf[4096];
    while (std::fgets(buf, sizeof(buf), pipe) != nullptr) {
        out += buf;
    }
    const int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string &text) {
    std::size_t lines = 0;
    for (const char c : text) {
        lines += c == '\n';
    }
    return lines;
}

const std::string kTasks = QREASON_TASKS_DIR;
const std::string kMalformed = std::string(QREASON_TEST_DATA_DIR) + "/malformed";
const std::string kModusPonens = kTasks + "/modus_ponens.qrp";
const std::string kExclusion = kTasks + "/exclusion.qrp";

} // namespace

TEST_CASE("run --format json emits exactly one JSON document") {
    const auto r = run_cli("run " + kModusPonens + " --format json 2>/dev/null");
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out); // throws on trailing junk
    REQUIRE(doc.contains("y_hat"));
    CHECK(doc["y_hat"].size() == 3);
    CHECK(doc.contains("z"));
    CHECK(doc.contains("zz"));
    CHECK(doc.contains("top_k"));

    // The pipeline is deterministic, so a repeat run is byte-identical.
    const auto again =
        run_cli("run " + kModusPonens + " --format json 2>/dev/null");
    CHECK(again.status == 0);
    CHECK(again.out == r.out);
}

TEST_CASE("shift and adjoint training both converge on a mixing-only task") {
    const std::string smoke =
        std::string(QREASON_TEST_DATA_DIR) + "/smoke_mixing.qrp";
    const auto adjoint =
        run_cli("train " + smoke + " --grad adjoint --seed 4 2>/dev/null");
    const auto shift =
        run_cli("train " + smoke + " --grad shift --seed 4 2>/dev/null");
    CHECK(adjoint.status == 0);
    CHECK(shift.status == 0);
    CHECK(adjoint.out.find("(converged)") != std::string::npos);
    CHECK(shift.out.find("(converged)") != std::string::npos);
}

TEST_CASE("run text output lists readouts and top assignments") {
    const auto r = run_cli("run " + kModusPonens + " 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.out.find("y_hat A = ") != std::string::npos);
    CHECK(r.out.find("y_hat C = ") != std::string::npos);
    CHECK(r.out.find("zz A,C = ") != std::string::npos);
    CHECK(r.out.find("top ") != std::string::npos);
}

TEST_CASE("run --format csv --top-k bounds the assignment rows") {
    const auto r =
        run_cli("run " + kModusPonens + " --format csv --top-k 2 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("kind,key,value\n", 0) == 0);
    // Header, three y_hat rows, three z rows, one zz row, two top_k rows.
    CHECK(count_lines(r.out) == 10);
}

TEST_CASE("malformed problems exit 1 with positioned diagnostics") {
    const std::string err = "cli_malformed_stderr.txt";
    const std::vector<std::pair<std::string, std::string>> corpus = {
        {"unknown_directive.qrp", "2:1: syntax: unknown directive"},
        {"bad_number.qrp", "syntax"},
        {"unknown_name.qrp", "unknown-name"},
        {"duplicate_prop.qrp", "duplicate-name"},
        {"layers_zero.qrp", "range"},
        {"prior_out_of_range.qrp", "range"},
        {"target_value.qrp", "range"},
        {"excl_arity.qrp", "arity"},
        {"mixed_separators.qrp", "cannot mix"},
        {"query_arity.qrp", "arity"},
        {"self_rule.qrp", "arity"},
        {"missing_arrow.qrp", "syntax"},
    };
    for (const auto &[file, needle] : corpus) {
        CAPTURE(file);
        const auto r =
            run_cli("run " + kMalformed + "/" + file + " 2>" + err);
        CHECK(r.status == 1);
        const std::string diag = read_file(err);
        CHECK(diag.find(needle) != std::string::npos);
        // Diagnostics carry the file name plus 1-based line:column.
        CHECK(diag.find(file + ":") != std::string::npos);
    }
}

TEST_CASE("a missing problem file exits 1") {
    const std::string err = "cli_missing_stderr.txt";
    const auto r = run_cli("run no_such_file.qrp 2>" + err);
    CHECK(r.status == 1);
    CHECK(read_file(err).find("cannot open") != std::string::npos);
}

TEST_CASE("exceeding the qubit cap exits 2") {
    const std::string err = "cli_cap_stderr.txt";
    const auto r = run_cli("run " + kModusPonens + " --max-qubits 2 2>" + err);
    CHECK(r.status == 2);
    CHECK(read_file(err).find("exceed the qubit cap of 2") !=
          std::string::npos);
}

TEST_CASE("grad-check agrees at the default step and exits 0") {
    const auto r = run_cli("grad-check " + kExclusion + " 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    const auto j = run_cli("grad-check " + kExclusion +
                           " --format json 2>/dev/null");
    CHECK(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["pass"].get<bool>());
    CHECK(doc["rows"].size() > 0);
}

TEST_CASE("grad-check with a coarse step reports failure via exit 3") {
    const auto r =
        run_cli("grad-check " + kModusPonens + " --h 0.35 2>/dev/null");
    CHECK(r.status == 3);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("train writes trace and parameter files deterministically") {
    const std::string common = "train " + kExclusion +
                               " --format json --epochs 30 --seed 11 ";
    const auto first = run_cli(common + "--trace cli_t1.csv "
                                        "--save-params cli_p1.json "
                                        "2>/dev/null");
    const auto second = run_cli(common + "--trace cli_t2.csv "
                                         "--save-params cli_p2.json "
                                         "2>/dev/null");
    CHECK(first.status == 0);
    CHECK(second.status == 0);
    CHECK(first.out == second.out); // byte-identical stdout

    const std::string trace = read_file("cli_t1.csv");
    CHECK(trace == read_file("cli_t2.csv"));
    CHECK(trace.rfind("epoch,loss,grad_inf_norm\n", 0) == 0);
    CHECK(count_lines(trace) >= 2);

    const std::string params = read_file("cli_p1.json");
    CHECK(params == read_file("cli_p2.json"));
    const auto doc = nlohmann::json::parse(params);
    CHECK(doc.contains("L1.excl0.phi"));

    const auto result = nlohmann::json::parse(first.out);
    CHECK(result.contains("final_loss"));
    CHECK(result.contains("params"));
}

TEST_CASE("train rejects a problem without targets") {
    const std::string err = "cli_notargets_stderr.txt";
    const auto r = run_cli("train " + kTasks + "/or_rule.qrp 2>" + err);
    CHECK(r.status == 1);
    CHECK(read_file(err).find("no targets") != std::string::npos);
}

TEST_CASE("inspect --program prints one line per gate") {
    const auto r =
        run_cli("inspect " + kModusPonens + " --program 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 7);
    CHECK(r.out.find("L1 rule q0 & q1 => q2") != std::string::npos);
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
        CHECK(line.rfind("L1 ", 0) == 0);
    }
}

TEST_CASE("inspect --amplitudes emits a row per basis state") {
    const auto r = run_cli("inspect " + kModusPonens +
                           " --amplitudes --format csv 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("index,bits,re,im,prob\n", 0) == 0);
    CHECK(count_lines(r.out) == 9); // header + 2^3 rows
}

TEST_CASE("inspect --layer 0 dumps the unevolved prior state") {
    const auto r = run_cli("inspect " + kModusPonens +
                           " --layer 0 --format csv 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 9);
    // Feature preparation is real, so every im field is exactly 0.
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        const auto second_last = line.rfind(',', line.rfind(',') - 1);
        CHECK(line.substr(second_last + 1,
                          line.rfind(',') - second_last - 1) == "0");
    }
}

TEST_CASE("inspect --layer past the last block exits 1") {
    const std::string err = "cli_layer_stderr.txt";
    const auto r =
        run_cli("inspect " + kModusPonens + " --layer 2 2>" + err);
    CHECK(r.status == 1);
    CHECK(read_file(err).find("out of range") != std::string::npos);
}

TEST_CASE("export --format text reproduces the canonical serialization") {
    const auto r =
        run_cli("export " + kModusPonens + " --format text 2>/dev/null");
    CHECK(r.status == 0);

    auto parsed = qreason::parse(read_file(kModusPonens));
    REQUIRE(parsed.ok());
    CHECK(r.out == qreason::serialize(*parsed.spec));
}

TEST_CASE("export rejects the csv format") {
    const std::string err = "cli_export_stderr.txt";
    const auto r = run_cli("export " + kModusPonens + " --format csv 2>" + err);
    CHECK(r.status == 1);
    CHECK(read_file(err).find("json and text") != std::string::npos);
}

TEST_CASE("export defaults to a JSON problem document") {
    const auto r = run_cli("export " + kModusPonens + " 2>/dev/null");
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.contains("propositions"));
    CHECK(doc.contains("rules"));
    CHECK(doc["layers"].get<int>() == 1);
}

TEST_CASE("an unknown subcommand exits 1 and --help exits 0") {
    const auto bad = run_cli("frobnicate 2>/dev/null");
    CHECK(bad.status == 1);

    const auto help = run_cli("--help 2>/dev/null");
    CHECK(help.status == 0);
    CHECK(help.out.find("train") != std::string::npos);
    CHECK(help.out.find("inspect") != std::string::npos);
}
