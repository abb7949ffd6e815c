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

#include "qreason/io.hpp"

#include <sstream>

#include "qreason/util.hpp"

namespace qreason {

Json report_to_json(const ReadoutReport &report) {
    Json out;
    Json y_hat = Json::object();
    for (const auto &nv : report.y_hat) {
        y_hat[nv.name] = nv.value;
    }
    out["y_hat"] = std::move(y_hat);
    Json z = Json::object();
    for (const auto &nv : report.z) {
        z[nv.name] = nv.value;
    }
    out["z"] = std::move(z);
    Json zz = Json::array();
    for (const auto &pv : report.zz) {
        zz.push_back({{"pair", Json::array({pv.first_name, pv.second_name})},
                      {"value", pv.value}});
    }
    out["zz"] = std::move(zz);
    Json top = Json::array();
    for (const auto &ba : report.top_k) {
        top.push_back({{"bits", ba.bits}, {"prob", ba.probability}});
    }
    out["top_k"] = std::move(top);
    return out;
}

std::string report_to_text(const ReadoutReport &report) {
    std::ostringstream out;
    for (const auto &nv : report.y_hat) {
        out << "y_hat " << nv.name << " = " << format_double(nv.value) << "\n";
    }
    for (const auto &nv : report.z) {
        out << "z " << nv.name << " = " << format_double(nv.value) << "\n";
    }
    for (const auto &pv : report.zz) {
        out << "zz " << pv.first_name << "," << pv.second_name << " = "
            << format_double(pv.value) << "\n";
    }
    for (const auto &ba : report.top_k) {
        out << "top " << ba.bits << " " << format_double(ba.probability)
            << "\n";
    }
    return out.str();
}

Json amplitudes_to_json(const Statevector &state) {
    Json out = Json::array();
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out.push_back({{"index", i},
                       {"bits", state.bits_string(i)},
                       {"re", amps[i].real()},
                       {"im", amps[i].imag()},
                       {"prob", std::norm(amps[i])}});
    }
    return out;
}

std::string amplitudes_to_csv(const Statevector &state) {
    std::ostringstream out;
    out << "index,bits,re,im,prob\n";
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out << i << "," << state.bits_string(i) << ","
            << format_double(amps[i].real()) << ","
            << format_double(amps[i].imag()) << ","
            << format_double(std::norm(amps[i])) << "\n";
    }
    return out.str();
}

std::string trace_to_csv(const std::vector<EpochRecord> &trace) {
    std::ostringstream out;
    out << "epoch,loss,grad_inf_norm\n";
    for (const auto &r : trace) {
        out << r.epoch << "," << format_double(r.loss) << ","
            << format_double(r.grad_inf_norm) << "\n";
    }
    return out.str();
}

Json train_result_to_json(const TrainResult &result,
                          const ReadoutReport &final_report) {
    Json out;
    Json trace = Json::array();
    for (const auto &r : result.trace) {
        trace.push_back({{"epoch", r.epoch},
                         {"loss", r.loss},
                         {"grad_inf_norm", r.grad_inf_norm}});
    }
    out["trace"] = std::move(trace);
    out["final_loss"] = result.final_loss;
    out["converged"] = result.converged;
    out["epochs_run"] = result.epochs_run();
    out["params"] = params_to_json(result.program.params);
    out["report"] = report_to_json(final_report);
    return out;
}

Json params_to_json(const ParameterStore &params) {
    Json out = Json::object();
    for (std::size_t i = 0; i < params.size(); ++i) {
        out[params.info(i).name] = params.value(i);
    }
    return out;
}

Json problem_to_json(const ProblemSpec &spec) {
    Json out;
    Json props = Json::array();
    for (const auto &p : spec.propositions) {
        props.push_back(p.name);
    }
    out["propositions"] = std::move(props);

    Json priors = Json::object();
    const auto prior_values = spec.prior_vector();
    for (std::size_t i = 0; i < spec.propositions.size(); ++i) {
        priors[spec.propositions[i].name] = prior_values[i];
    }
    out["priors"] = std::move(priors);

    Json rules = Json::array();
    for (const auto &r : spec.rules) {
        rules.push_back({{"antecedents", r.antecedents},
                         {"mode", r.mode == RuleMode::And ? "and" : "or"},
                         {"consequent", r.consequent},
                         {"theta", r.theta},
                         {"trainable", r.trainable}});
    }
    out["rules"] = std::move(rules);

    Json constraints = Json::array();
    for (const auto &c : spec.constraints) {
        constraints.push_back({{"members", c.members},
                               {"phi", c.phi},
                               {"trainable", c.trainable}});
    }
    out["constraints"] = std::move(constraints);

    out["layers"] = spec.layers;

    Json targets = Json::object();
    for (const auto &t : spec.targets) {
        targets[t.name] = t.value;
    }
    out["targets"] = std::move(targets);

    Json queries = Json::array();
    for (const auto &q : spec.queries) {
        queries.push_back(q.names);
    }
    out["queries"] = std::move(queries);
    return out;
}

} // namespace qreason
