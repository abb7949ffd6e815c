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
 * @file io.hpp
 * Machine-readable serialization of reports, amplitudes, traces and
 * problems. All emitters are deterministic: keys appear in declaration
 * order and numbers render identically across runs, so repeated export of
 * the same data is byte-identical.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qreason/circuit.hpp"
#include "qreason/problem.hpp"
#include "qreason/readout.hpp"
#include "qreason/statevector.hpp"
#include "qreason/train.hpp"

namespace qreason {

using Json = nlohmann::ordered_json;

/// {"y_hat": {name: v}, "z": {name: v}, "zz": [{"pair": [a, b],
/// "value": v}], "top_k": [{"bits": "110", "prob": p}]}.
Json report_to_json(const ReadoutReport &report);

std::string report_to_text(const ReadoutReport &report);

/// Array of {index, bits, re, im, prob} in basis order.
Json amplitudes_to_json(const Statevector &state);

/// Columns index,bits,re,im,prob with a header row.
std::string amplitudes_to_csv(const Statevector &state);

/// Columns epoch,loss,grad_inf_norm with a header row.
std::string trace_to_csv(const std::vector<EpochRecord> &trace);

/// Full trace plus final parameters and the final readout report.
Json train_result_to_json(const TrainResult &result,
                          const ReadoutReport &final_report);

/// Flat {name: value} map in parameter order.
Json params_to_json(const ParameterStore &params);

/// Resolved problem structure (export command).
Json problem_to_json(const ProblemSpec &spec);

} // namespace qreason
