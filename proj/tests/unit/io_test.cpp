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

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qreason/io.hpp"
#include "qreason/parser.hpp"
#include "qreason/readout.hpp"
#include "qreason/train.hpp"

using qreason::Json;
using qreason::ProblemSpec;
using qreason::Statevector;

namespace {

ProblemSpec parse_spec(const std::string &text) {
    auto r = qreason::parse(text);
    if (!r.ok()) {
        throw std::runtime_error("test fixture failed to parse: " + text);
    }
    return *r.spec;
}

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("report JSON keeps declaration order and the contracted shape") {
    const ProblemSpec spec = parse_spec("prop B A\n"
                                        "prior B 1\nprior A 0\n"
                                        "layers 1\n"
                                        "query B A\n");
    const Statevector s = qreason::prepare_from_features(spec.prior_vector());
    const auto report = qreason::make_report(s, spec, 2);
    const Json json = qreason::report_to_json(report);

    REQUIRE(json.contains("y_hat"));
    REQUIRE(json.contains("z"));
    REQUIRE(json.contains("zz"));
    REQUIRE(json.contains("top_k"));

    // ordered_json preserves proposition declaration order (B before A).
    const auto &y = json["y_hat"];
    auto it = y.begin();
    CHECK(it.key() == "B");
    CHECK(++it != y.end());
    CHECK(it.key() == "A");
    CHECK(y["B"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(y["A"].get<double>() == doctest::Approx(0.0).epsilon(1e-14));

    REQUIRE(json["zz"].size() == 1);
    CHECK(json["zz"][0]["pair"] == Json::array({"B", "A"}));
    CHECK(json["zz"][0]["value"].get<double>() ==
          doctest::Approx(-1.0).epsilon(1e-12));

    REQUIRE(json["top_k"].size() == 2);
    CHECK(json["top_k"][0]["bits"] == "10");
    CHECK(json["top_k"][0]["prob"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("report text renders one labeled line per quantity") {
    const ProblemSpec spec = parse_spec("prop A\nprior A 0\nlayers 1\n");
    const Statevector s = qreason::prepare_from_features(spec.prior_vector());
    const auto report = qreason::make_report(s, spec, 1);
    const auto lines = split_lines(qreason::report_to_text(report));
    REQUIRE(lines.size() == 3); // y_hat, z, one top entry; no zz queries
    CHECK(lines[0] == "y_hat A = 0");
    CHECK(lines[1] == "z A = 1");
    CHECK(lines[2] == "top 0 1");
}

TEST_CASE("amplitude emitters agree with each other and the state") {
    const Statevector s = qreason::prepare_from_features({{0.5, 0.0}});
    const Json json = qreason::amplitudes_to_json(s);
    REQUIRE(json.size() == 4);
    CHECK(json[0]["index"] == 0);
    CHECK(json[0]["bits"] == "00");
    CHECK(json[2]["bits"] == "10");
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(json[i]["re"].get<double>() == s[i].real());
        CHECK(json[i]["im"].get<double>() == s[i].imag());
        CHECK(json[i]["prob"].get<double>() == std::norm(s[i]));
    }

    const auto lines = split_lines(qreason::amplitudes_to_csv(s));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "index,bits,re,im,prob");
    CHECK(lines[1].rfind("0,00,", 0) == 0);
    CHECK(lines[3].rfind("2,10,", 0) == 0);
    // 2^N data rows, one per basis state.
    CHECK(lines.size() - 1 == s.size());
}

TEST_CASE("trace CSV has a header and one row per epoch") {
    std::vector<qreason::EpochRecord> trace{{1, 0.5, 0.25}, {2, 0.125, 0.0625}};
    const auto lines = split_lines(qreason::trace_to_csv(trace));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "epoch,loss,grad_inf_norm");
    CHECK(lines[1] == "1,0.5,0.25");
    CHECK(lines[2] == "2,0.125,0.0625");
}

TEST_CASE("train result JSON carries trace, params and the final report") {
    const ProblemSpec spec = parse_spec("prop A B\n"
                                        "prior A 0.9\n"
                                        "rule A => B\n"
                                        "layers 1\n"
                                        "target B 1\n");
    qreason::TrainConfig config;
    config.epochs = 5;
    config.loss_threshold = 0.0;
    const auto result = qreason::train(spec, config);
    const auto report = qreason::make_report(
        qreason::forward(result.program, result.initial_state), spec, 2);
    const Json json = qreason::train_result_to_json(result, report);

    CHECK(json["epochs_run"] == 5);
    CHECK(json["trace"].size() == 5);
    CHECK(json["trace"][0]["epoch"] == 1);
    CHECK(json["final_loss"].get<double>() == result.final_loss);
    CHECK(json["converged"] == false);
    REQUIRE(json.contains("params"));
    CHECK(json["params"].size() == result.program.params.size());
    CHECK(json["params"].contains("L1.rule0.theta"));
    CHECK(json["report"]["y_hat"].contains("B"));
}

TEST_CASE("identical data serializes byte-identically") {
    const ProblemSpec spec = parse_spec("prop A B C\n"
                                        "prior B 0.25\n"
                                        "rule A & B => C theta=0.7\n"
                                        "excl A B\n"
                                        "layers 2\n"
                                        "target C 1\n"
                                        "query A B\n");
    const Statevector s = qreason::prepare_from_features(spec.prior_vector());
    const auto report = qreason::make_report(s, spec, 4);
    CHECK(qreason::report_to_json(report).dump(2) ==
          qreason::report_to_json(report).dump(2));
    CHECK(qreason::amplitudes_to_csv(s) == qreason::amplitudes_to_csv(s));
    CHECK(qreason::problem_to_json(spec).dump() ==
          qreason::problem_to_json(spec).dump());
}

TEST_CASE("problem JSON resolves priors and keeps section order") {
    const ProblemSpec spec = parse_spec("prop A B C\n"
                                        "prior B 0.25\n"
                                        "rule A | B => C theta=0.7!\n"
                                        "excl A B phi=1.5\n"
                                        "layers 3\n"
                                        "target C 0\n"
                                        "query A\n"
                                        "query A B\n");
    const Json json = qreason::problem_to_json(spec);
    CHECK(json["propositions"] == Json::array({"A", "B", "C"}));
    CHECK(json["priors"]["A"] == 0.5);
    CHECK(json["priors"]["B"] == 0.25);
    REQUIRE(json["rules"].size() == 1);
    CHECK(json["rules"][0]["mode"] == "or");
    CHECK(json["rules"][0]["antecedents"] == Json::array({"A", "B"}));
    CHECK(json["rules"][0]["theta"] == 0.7);
    CHECK(json["rules"][0]["trainable"] == false);
    REQUIRE(json["constraints"].size() == 1);
    CHECK(json["constraints"][0]["members"] == Json::array({"A", "B"}));
    CHECK(json["constraints"][0]["phi"] == 1.5);
    CHECK(json["layers"] == 3);
    CHECK(json["targets"]["C"] == 0);
    CHECK(json["queries"] == Json::array({Json::array({"A"}),
                                          Json::array({"A", "B"})}));

    // Round trip through the parser: JSON mirrors the canonical text.
    const auto round = qreason::parse(qreason::serialize(spec));
    REQUIRE(round.ok());
    CHECK(qreason::problem_to_json(*round.spec) == json);
}
