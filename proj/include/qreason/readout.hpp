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
 * @file readout.hpp
 * Exact observable readout from a statevector. Truth probabilities come
 * from single-qubit Z expectations through y = (1 - <Z>) / 2, never from
 * sampling, so repeated readout of the same state is bit-identical.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qreason/problem.hpp"
#include "qreason/statevector.hpp"

namespace qreason {

/// <Z_q> = sum over basis states of |amp|^2 . (+1 if bit q is 0, -1 if 1).
double z_expectation(const Statevector &state, std::size_t qubit);

/// Truth probability y = (1 - <Z_q>) / 2, in [0, 1] up to rounding.
double truth_probability(const Statevector &state, std::size_t qubit);

/// <Z_i Z_j> for distinct qubits; throws DomainError when i == j.
double zz_correlation(const Statevector &state, std::size_t i, std::size_t j);

/// P(all listed qubits read true): the |amp|^2 mass of basis states whose
/// listed bits are all 1. Duplicates are harmless.
double joint_probability(const Statevector &state,
                         std::span<const std::size_t> qubits);

struct BasisAssignment {
    std::size_t index = 0;    // basis index, bit 0 most significant
    std::string bits;         // "101..." rendering of index
    double probability = 0.0;
};

/**
 * @brief The k most probable basis assignments, descending probability.
 *
 * Equal probabilities order by ascending basis index, so the result is a
 * deterministic function of the state. Throws DomainError unless
 * 1 <= k <= 2^N.
 */
std::vector<BasisAssignment> top_k_assignments(const Statevector &state,
                                               std::size_t k);

struct PairValue {
    std::size_t first = 0;
    std::size_t second = 0;
    std::string first_name;
    std::string second_name;
    double value = 0.0;
};

struct NamedValue {
    std::string name;
    double value = 0.0;
};

/// Full readout of a state against a problem: per-proposition truth
/// probabilities and Z expectations, queried ZZ correlators, top-k list.
struct ReadoutReport {
    std::vector<NamedValue> y_hat; // proposition declaration order
    std::vector<NamedValue> z;
    std::vector<PairValue> zz; // pair query declaration order
    std::vector<BasisAssignment> top_k;
};

ReadoutReport make_report(const Statevector &state, const ProblemSpec &spec,
                          std::size_t top_k);

} // namespace qreason
