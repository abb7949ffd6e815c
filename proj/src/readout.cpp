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

#include "qreason/readout.hpp"

#include <algorithm>
#include <numeric>

#include "qreason/errors.hpp"

namespace qreason {

double z_expectation(const Statevector &state, std::size_t qubit) {
    const std::size_t mask = state.qubit_mask(qubit);
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        acc += (i & mask) ? -p : p;
    }
    return acc;
}

double truth_probability(const Statevector &state, std::size_t qubit) {
    return (1.0 - z_expectation(state, qubit)) / 2.0;
}

double zz_correlation(const Statevector &state, std::size_t i, std::size_t j) {
    if (i == j) {
        throw DomainError("ZZ correlator requires two distinct qubits");
    }
    const std::size_t mi = state.qubit_mask(i);
    const std::size_t mj = state.qubit_mask(j);
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const double p = std::norm(amps[b]);
        const bool flip = ((b & mi) != 0) != ((b & mj) != 0);
        acc += flip ? -p : p;
    }
    return acc;
}

double joint_probability(const Statevector &state,
                         std::span<const std::size_t> qubits) {
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        mask |= state.qubit_mask(q);
    }
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if ((b & mask) == mask) {
            acc += std::norm(amps[b]);
        }
    }
    return acc;
}

std::vector<BasisAssignment> top_k_assignments(const Statevector &state,
                                               std::size_t k) {
    const std::size_t n = state.size();
    if (k < 1 || k > n) {
        throw DomainError("top-k count " + std::to_string(k) +
                          " outside [1, " + std::to_string(n) + "]");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto amps = state.amplitudes();
    // Ties resolve to the lower basis index; stability of the ordering is
    // part of the readout contract.
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](std::size_t a, std::size_t b) {
                          const double pa = std::norm(amps[a]);
                          const double pb = std::norm(amps[b]);
                          if (pa != pb) {
                              return pa > pb;
                          }
                          return a < b;
                      });
    std::vector<BasisAssignment> out;
    out.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t idx = order[r];
        out.push_back({idx, state.bits_string(idx), std::norm(amps[idx])});
    }
    return out;
}

ReadoutReport make_report(const Statevector &state, const ProblemSpec &spec,
                          std::size_t top_k) {
    if (spec.num_qubits() != state.num_qubits()) {
        throw DomainError("state qubit count does not match the problem");
    }
    ReadoutReport report;
    for (std::size_t q = 0; q < spec.num_qubits(); ++q) {
        const double z = z_expectation(state, q);
        report.z.push_back({spec.propositions[q].name, z});
        report.y_hat.push_back({spec.propositions[q].name, (1.0 - z) / 2.0});
    }
    for (const auto &[a, b] : spec.pair_queries()) {
        report.zz.push_back({a, b, spec.propositions[a].name,
                             spec.propositions[b].name,
                             zz_correlation(state, a, b)});
    }
    // Reports tolerate any requested k; only the raw readout is strict.
    report.top_k = top_k_assignments(
        state, std::clamp<std::size_t>(top_k, 1, state.size()));
    return report;
}

} // namespace qreason
