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
 * @file gates.hpp
 * The three gate families applied in place to a statevector:
 *
 *   - mixing rotations  Ry(g) = exp(-i g Y / 2), Rz(g) = exp(-i g Z / 2)
 *   - rule gates        exp(-i theta/2 . P ⊗ X_target), P a projector over
 *                        the controls (AND: all true, OR: at least one true)
 *   - phase penalties   exp(i phi . P), P the all-true projector over a
 *                        qubit subset (diagonal, probability preserving)
 *
 * plus a dense Kronecker-embedded matrix construction of the same gates,
 * used as an equivalence oracle by the test suite and the CLI oracle check.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qreason/statevector.hpp"

namespace qreason {

enum class RuleMode { And, Or };

struct RotYGate {
    std::size_t qubit = 0;
    std::size_t param = 0;
};

struct RotZGate {
    std::size_t qubit = 0;
    std::size_t param = 0;
};

struct RuleGate {
    std::vector<std::size_t> controls; // arity >= 1, distinct
    RuleMode mode = RuleMode::And;
    std::size_t target = 0; // never a control
    std::size_t param = 0;
};

struct PhaseGate {
    std::vector<std::size_t> qubits; // arity >= 2, distinct
    std::size_t param = 0;
};

/// A gate description: immutable value, angle resolved through `param`
/// against a ParameterStore at application time.
using Gate = std::variant<RotYGate, RotZGate, RuleGate, PhaseGate>;

/// Ry(angle): amplitude pairs (a0, a1) over `qubit` map to
/// (cos(t)a0 - sin(t)a1, sin(t)a0 + cos(t)a1) with t = angle/2.
void apply_rot_y(Statevector &s, std::size_t qubit, double angle);

/// Rz(angle): bit 0 amplitudes pick up e^{-i angle/2}, bit 1 e^{+i angle/2}.
void apply_rot_z(Statevector &s, std::size_t qubit, double angle);

/**
 * @brief Conditioned X rotation of `target` by `theta`.
 *
 * On every amplitude pair differing only in the target bit whose control
 * bits satisfy the mode predicate (AND: all set, OR: any set), applies
 * [[cos(t), -i sin(t)], [-i sin(t), cos(t)]], t = theta/2. All other
 * amplitudes are untouched.
 */
void apply_rule_gate(Statevector &s, std::span<const std::size_t> controls,
                     RuleMode mode, std::size_t target, double theta);

/// Multiplies amplitudes whose `qubits` bits are all 1 by e^{i phi}.
/// Diagonal: basis probabilities are preserved up to rounding. Arity must
/// be >= 2.
void apply_phase_gate(Statevector &s, std::span<const std::size_t> qubits,
                      double phi);

/// Applies `gate` with the given angle value.
void apply_gate(Statevector &s, const Gate &gate, double value);

/// Applies the inverse. All three families satisfy U(v)^-1 = U(-v).
void apply_gate_inverse(Statevector &s, const Gate &gate, double value);

/**
 * @brief In-place application of the derivative generator M of a gate,
 * where dU/dvalue = M . U(value).
 *
 * Rotations and rule gates: M = -i/2 times the (projected) Pauli generator.
 * Phase gates: M = i P. Used by the reverse-pass gradient; M is not unitary
 * (projector families annihilate the unselected subspace).
 */
void apply_angle_generator(Statevector &s, const Gate &gate);

/// Largest qubit count accepted by dense_embed (matrix cost guard).
inline constexpr std::size_t kDenseEmbedQubitLimit = 10;

/// Full 2^N x 2^N gate matrix, row major.
struct DenseUnitary {
    std::size_t dim = 0;
    std::vector<std::complex<double>> entries;

    std::complex<double> &at(std::size_t row, std::size_t col) {
        return entries[row * dim + col];
    }
    const std::complex<double> &at(std::size_t row, std::size_t col) const {
        return entries[row * dim + col];
    }

    /// Matrix-vector product against a statevector of matching size.
    [[nodiscard]] Statevector apply(const Statevector &s) const;
};

/**
 * @brief Dense Kronecker embedding of a gate into the full Hilbert space.
 *
 * Rotations are built as I ⊗ ... ⊗ R ⊗ ... ⊗ I; rule and phase gates from
 * their projector generators. Test oracle only; throws ResourceError for
 * num_qubits > kDenseEmbedQubitLimit.
 */
DenseUnitary dense_embed(const Gate &gate, double value,
                         std::size_t num_qubits);

} // namespace qreason
