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
 * @file statevector.hpp
 * Dense complex statevector over N proposition qubits, plus the state
 * preparation routines that map classical priors or rotation-angle pairs
 * into an initial product state.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qreason/errors.hpp"

namespace qreason {

/// Default ceiling on the qubit count. 2^24 amplitudes (256 MB) is the
/// desk-scale memory limit; callers may override it explicitly.
inline constexpr std::size_t kQubitCap = 24;

/// One pair of state-preparation angles: |psi> = Rz(theta_z) Ry(theta_y) |0>.
struct AnglePair {
    double theta_y = 0.0;
    double theta_z = 0.0;
};

/**
 * @brief Normalized vector of 2^N complex amplitudes.
 *
 * Bit convention: qubit 0 is the MOST significant bit of a basis index, so
 * the index of |b0 b1 ... b(N-1)> reads left to right as a binary numeral.
 * Every module in this project uses this single convention.
 */
class Statevector {
  public:
    using Complex = std::complex<double>;

    /// Constructs |00...0>. Throws ResourceError above `max_qubits`,
    /// DomainError for zero qubits.
    explicit Statevector(std::size_t num_qubits,
                         std::size_t max_qubits = kQubitCap);

    /// Wraps an explicit amplitude vector (must have length 2^num_qubits).
    static Statevector from_amplitudes(std::size_t num_qubits,
                                       std::vector<Complex> amps,
                                       std::size_t max_qubits = kQubitCap);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }

    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] std::span<Complex> amplitudes() { return amps_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }

    /// Sum of |amp|^2 (1 for a normalized state).
    [[nodiscard]] double squared_norm() const;

    /// Basis-index mask selecting the bit of `qubit` (qubit 0 = MSB).
    [[nodiscard]] std::size_t qubit_mask(std::size_t qubit) const;

    /// Value of `qubit`'s bit within basis index `basis`.
    [[nodiscard]] bool bit(std::size_t basis, std::size_t qubit) const;

    /// Renders a basis index as a bit string, qubit 0 leftmost.
    [[nodiscard]] std::string bits_string(std::size_t basis) const;

  private:
    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/**
 * @brief Product state from classical features x_i in [0,1].
 *
 * Each qubit is prepared as cos(pi x/2)|0> + sin(pi x/2)|1>; all amplitudes
 * are real and non-negative. Throws DomainError naming the offending index
 * when a feature leaves [0,1].
 */
Statevector prepare_from_features(std::span<const double> features,
                                  std::size_t max_qubits = kQubitCap);

/**
 * @brief Product state from per-qubit rotation pairs Rz(theta_z)Ry(theta_y)|0>.
 *
 * Per qubit: e^{-i theta_z/2} cos(theta_y/2)|0> + e^{+i theta_z/2}
 * sin(theta_y/2)|1>. Angles are unrestricted (periodic). Throws DomainError
 * on an empty pair list.
 */
Statevector prepare_from_angles(std::span<const AnglePair> pairs,
                                std::size_t max_qubits = kQubitCap);

/// Born-rule probability of every basis state: p_x = |psi_x|^2.
std::vector<double> basis_probabilities(const Statevector &s);

/// <a|b> = sum_x conj(a_x) b_x. Throws DomainError on mismatched qubit counts.
std::complex<double> inner_product(const Statevector &a, const Statevector &b);

} // namespace qreason
