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

#include "qreason/statevector.hpp"

#include <cmath>
#include <numbers>

namespace qreason {

Statevector::Statevector(std::size_t num_qubits, std::size_t max_qubits)
    : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw DomainError("statevector requires at least one qubit");
    }
    if (num_qubits > max_qubits) {
        throw ResourceError("qubit count " + std::to_string(num_qubits) +
                            " exceeds the cap of " + std::to_string(max_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

Statevector Statevector::from_amplitudes(std::size_t num_qubits,
                                         std::vector<Complex> amps,
                                         std::size_t max_qubits) {
    Statevector s(num_qubits, max_qubits);
    if (amps.size() != s.size()) {
        throw DomainError("amplitude vector has length " +
                          std::to_string(amps.size()) + ", expected " +
                          std::to_string(s.size()));
    }
    s.amps_ = std::move(amps);
    return s;
}

double Statevector::squared_norm() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::size_t Statevector::qubit_mask(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw DomainError("qubit index " + std::to_string(qubit) +
                          " out of range for " + std::to_string(num_qubits_) +
                          " qubits");
    }
    return std::size_t{1} << (num_qubits_ - 1 - qubit);
}

bool Statevector::bit(std::size_t basis, std::size_t qubit) const {
    return (basis & qubit_mask(qubit)) != 0;
}

std::string Statevector::bits_string(std::size_t basis) const {
    std::string out(num_qubits_, '0');
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        if (basis & (std::size_t{1} << (num_qubits_ - 1 - q))) {
            out[q] = '1';
        }
    }
    return out;
}

Statevector prepare_from_features(std::span<const double> features,
                                  std::size_t max_qubits) {
    if (features.empty()) {
        throw DomainError("feature vector is empty");
    }
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (!(features[i] >= 0.0 && features[i] <= 1.0)) {
            throw DomainError("feature " + std::to_string(i) + " = " +
                              std::to_string(features[i]) +
                              " outside [0, 1]");
        }
    }
    const std::size_t n = features.size();
    Statevector s(n, max_qubits);
    // Tensor product of (cos(pi x/2), sin(pi x/2)) per qubit. Qubits are
    // folded in reverse so that qubit 0 lands on the most significant bit.
    auto amps = s.amplitudes();
    amps[0] = 1.0;
    std::size_t filled = 1;
    for (std::size_t q = n; q-- > 0;) {
        const double c = std::cos(std::numbers::pi * features[q] / 2.0);
        const double d = std::sin(std::numbers::pi * features[q] / 2.0);
        for (std::size_t i = 0; i < filled; ++i) {
            const auto base = amps[i];
            amps[i] = base * c;
            amps[i + filled] = base * d;
        }
        filled <<= 1;
    }
    return s;
}

Statevector prepare_from_angles(std::span<const AnglePair> pairs,
                                std::size_t max_qubits) {
    if (pairs.empty()) {
        throw DomainError("angle-pair list is empty");
    }
    const std::size_t n = pairs.size();
    Statevector s(n, max_qubits);
    auto amps = s.amplitudes();
    amps[0] = 1.0;
    std::size_t filled = 1;
    for (std::size_t q = n; q-- > 0;) {
        const std::complex<double> a0 =
            std::polar(std::cos(pairs[q].theta_y / 2.0), -pairs[q].theta_z / 2.0);
        const std::complex<double> a1 =
            std::polar(std::sin(pairs[q].theta_y / 2.0), +pairs[q].theta_z / 2.0);
        for (std::size_t i = 0; i < filled; ++i) {
            const auto base = amps[i];
            amps[i] = base * a0;
            amps[i + filled] = base * a1;
        }
        filled <<= 1;
    }
    return s;
}

std::vector<double> basis_probabilities(const Statevector &s) {
    std::vector<double> probs(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        probs[i] = std::norm(s[i]);
    }
    return probs;
}

std::complex<double> inner_product(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner product of statevectors with different qubit "
                          "counts");
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

} // namespace qreason
