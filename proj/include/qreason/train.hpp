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
 * @file train.hpp
 * Loss, gradients and the training loop.
 *
 * The loss is clamped binary cross-entropy over the targeted truth
 * probabilities. Three gradient methods share one signature:
 *
 *   - adjoint: one forward pass, then a reverse sweep that un-applies each
 *     gate while accumulating 2 Re<lambda|M psi>. Exact for every family.
 *   - parameter shift: two shifted forwards (+-pi/2) per parameter, chained
 *     through the loss derivative at the unshifted point. Exact for the
 *     single-frequency rotation and phase families, approximate for rule
 *     gates (their projector generator mixes two frequencies).
 *   - central finite differences: reference-quality but O(h^2) biased.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qreason/circuit.hpp"
#include "qreason/problem.hpp"
#include "qreason/statevector.hpp"

namespace qreason {

/// Predicted probabilities are clamped to [kBceClamp, 1 - kBceClamp]
/// before the logarithms.
inline constexpr double kBceClamp = 1e-7;

/// -(y ln c + (1 - y) ln(1 - c)) with c the clamped prediction.
double bce_loss(double y_hat, int target);

/// dBCE/dy_hat; zero in the clamped regions where the loss is flat.
double bce_loss_derivative(double y_hat, int target);

/// (qubit index, target truth value) pairs.
using TargetMap = std::vector<std::pair<std::size_t, int>>;

/// Loss with its per-target breakdown; total is the sum of the parts.
struct LossValue {
    double total = 0.0;
    std::vector<std::pair<std::size_t, double>> per_target; // (qubit, term)
};

/// BCE loss of the circuit run from `init` against `targets`.
LossValue evaluate_loss(const CircuitProgram &program, const Statevector &init,
                        const TargetMap &targets);

enum class GradMethod { Adjoint, ParameterShift, FiniteDifference };

struct GradResult {
    double loss = 0.0;             // loss at the unshifted parameters
    std::vector<double> gradient;  // per parameter; frozen entries exactly 0
};

GradResult grad_adjoint(const CircuitProgram &program, const Statevector &init,
                        const TargetMap &targets);

GradResult grad_parameter_shift(const CircuitProgram &program,
                                const Statevector &init,
                                const TargetMap &targets);

inline constexpr double kDefaultFdStep = 1e-5;

GradResult grad_finite_difference(const CircuitProgram &program,
                                  const Statevector &init,
                                  const TargetMap &targets,
                                  double step = kDefaultFdStep);

/// Dispatch over GradMethod; `fd_step` only applies to finite differences.
GradResult gradient(const CircuitProgram &program, const Statevector &init,
                    const TargetMap &targets, GradMethod method,
                    double fd_step = kDefaultFdStep);

enum class OptimizerKind { Adam, Sgd };

struct TrainConfig {
    std::size_t epochs = 500;
    double learning_rate = 0.05;
    OptimizerKind optimizer = OptimizerKind::Adam;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    GradMethod method = GradMethod::Adjoint;
    double fd_step = kDefaultFdStep;
    /// Training stops once the recorded epoch loss drops below this.
    double loss_threshold = 1e-3;
    std::uint64_t seed = 0;
    /// Trainable mixing angles start at kDefaultMixAngle plus a seeded
    /// uniform draw from [-mix_jitter, mix_jitter], breaking symmetry
    /// between otherwise identical layers.
    double mix_jitter = 0.01;
    CompileOptions compile;
    std::size_t max_qubits = kQubitCap;
};

struct EpochRecord {
    std::size_t epoch = 0; // 1-based, contiguous
    double loss = 0.0;
    double grad_inf_norm = 0.0; // over trainable parameters
};

struct TrainResult {
    CircuitProgram program; // parameters hold their trained values
    Statevector initial_state;
    std::vector<EpochRecord> trace;
    double final_loss = 0.0; // loss at the returned parameters
    bool converged = false;
    [[nodiscard]] std::size_t epochs_run() const { return trace.size(); }
};

/**
 * @brief Compiles `spec`, jitters the mixing angles, and optimizes the
 * trainable parameters against the declared targets.
 *
 * Each epoch records (epoch, loss, gradient infinity norm) before any
 * update; the loop stops early once the recorded loss falls below
 * `loss_threshold`, leaving the parameters that achieved it untouched.
 * Frozen parameters are never modified. `epochs` = 0 is an evaluate-only
 * run: the trace holds the initial loss and no step is taken.
 *
 * Throws DomainError when the problem declares no targets.
 */
TrainResult train(const ProblemSpec &spec, const TrainConfig &config);

} // namespace qreason
