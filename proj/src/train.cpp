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

#include "qreason/train.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <span>

#include "qreason/errors.hpp"
#include "qreason/readout.hpp"

namespace qreason {

namespace {

std::size_t param_of(const Gate &gate) {
    return std::visit([](const auto &g) { return g.param; }, gate);
}

/// Forward evolution with an explicit value vector, leaving the program's
/// own parameter store untouched.
Statevector run_with(const CircuitProgram &program,
                     std::span<const double> values, const Statevector &init) {
    Statevector state = init;
    for (const Gate &gate : program.gates) {
        apply_gate(state, gate, values[param_of(gate)]);
    }
    return state;
}

double loss_of_state(const Statevector &state, const TargetMap &targets) {
    double loss = 0.0;
    for (const auto &[qubit, target] : targets) {
        loss += bce_loss(truth_probability(state, qubit), target);
    }
    return loss;
}

/// Per-target weights w_t = dBCE/dy . dy/d<Z> = dBCE/dy . (-1/2), evaluated
/// at the given state.
std::vector<double> target_weights(const Statevector &state,
                                   const TargetMap &targets) {
    std::vector<double> w(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto &[qubit, target] = targets[t];
        w[t] = bce_loss_derivative(truth_probability(state, qubit), target) *
               -0.5;
    }
    return w;
}

/// lambda = O psi with O = sum_t w_t Z_t, a diagonal operator.
Statevector observable_times(const Statevector &psi, const TargetMap &targets,
                             const std::vector<double> &w) {
    Statevector lambda = psi;
    auto amps = lambda.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        double diag = 0.0;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const std::size_t mask = psi.qubit_mask(targets[t].first);
            diag += (b & mask) ? -w[t] : w[t];
        }
        amps[b] *= diag;
    }
    return lambda;
}

} // namespace

double bce_loss(double y_hat, int target) {
    // Each orientation is clamped on its own so the rails are symmetric:
    // the floor term is -log(kBceClamp) exactly, never -log(1 - (1 - c)).
    const double c = std::clamp(y_hat, kBceClamp, 1.0 - kBceClamp);
    const double cbar = std::clamp(1.0 - y_hat, kBceClamp, 1.0 - kBceClamp);
    const double y = static_cast<double>(target);
    return -(y * std::log(c) + (1.0 - y) * std::log(cbar));
}

double bce_loss_derivative(double y_hat, int target) {
    if (y_hat <= kBceClamp || y_hat >= 1.0 - kBceClamp) {
        return 0.0;
    }
    const double y = static_cast<double>(target);
    return -y / y_hat + (1.0 - y) / (1.0 - y_hat);
}

LossValue evaluate_loss(const CircuitProgram &program, const Statevector &init,
                        const TargetMap &targets) {
    const Statevector state =
        run_with(program, program.params.values(), init);
    LossValue out;
    for (const auto &[qubit, target] : targets) {
        const double term = bce_loss(truth_probability(state, qubit), target);
        out.per_target.emplace_back(qubit, term);
        out.total += term;
    }
    return out;
}

GradResult grad_adjoint(const CircuitProgram &program, const Statevector &init,
                        const TargetMap &targets) {
    GradResult result;
    result.gradient.assign(program.params.size(), 0.0);

    Statevector psi = run_with(program, program.params.values(), init);
    result.loss = loss_of_state(psi, targets);

    const auto w = target_weights(psi, targets);
    Statevector lambda = observable_times(psi, targets, w);

    // Reverse sweep: with psi behind gate k and lambda the back-propagated
    // observable, dL/dv_k = 2 Re<lambda|M_k psi>.
    for (std::size_t k = program.gates.size(); k-- > 0;) {
        const Gate &gate = program.gates[k];
        const std::size_t p = param_of(gate);
        const double value = program.params.value(p);

        if (program.params.info(p).trainable) {
            Statevector tangent = psi;
            apply_angle_generator(tangent, gate);
            result.gradient[p] += 2.0 * inner_product(lambda, tangent).real();
        }

        apply_gate_inverse(psi, gate, value);
        apply_gate_inverse(lambda, gate, value);
    }
    return result;
}

GradResult grad_parameter_shift(const CircuitProgram &program,
                                const Statevector &init,
                                const TargetMap &targets) {
    GradResult result;
    result.gradient.assign(program.params.size(), 0.0);

    const Statevector base = run_with(program, program.params.values(), init);
    result.loss = loss_of_state(base, targets);
    // The chain rule factor is held at the unshifted point; the shifts only
    // probe the expectation values.
    const auto w = target_weights(base, targets);

    std::vector<double> values = program.params.values();
    constexpr double shift = std::numbers::pi / 2.0;
    for (std::size_t p = 0; p < values.size(); ++p) {
        if (!program.params.info(p).trainable) {
            continue; // frozen components stay exactly 0
        }
        const double saved = values[p];
        values[p] = saved + shift;
        const Statevector plus = run_with(program, values, init);
        values[p] = saved - shift;
        const Statevector minus = run_with(program, values, init);
        values[p] = saved;

        double g = 0.0;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const std::size_t q = targets[t].first;
            g += w[t] * 0.5 *
                 (z_expectation(plus, q) - z_expectation(minus, q));
        }
        result.gradient[p] = g;
    }
    return result;
}

GradResult grad_finite_difference(const CircuitProgram &program,
                                  const Statevector &init,
                                  const TargetMap &targets, double step) {
    if (!(step > 0.0)) {
        throw DomainError("finite-difference step must be positive");
    }
    GradResult result;
    result.gradient.assign(program.params.size(), 0.0);
    result.loss =
        loss_of_state(run_with(program, program.params.values(), init),
                      targets);

    std::vector<double> values = program.params.values();
    for (std::size_t p = 0; p < values.size(); ++p) {
        if (!program.params.info(p).trainable) {
            continue; // frozen components stay exactly 0
        }
        const double saved = values[p];
        values[p] = saved + step;
        const double plus = loss_of_state(run_with(program, values, init),
                                          targets);
        values[p] = saved - step;
        const double minus = loss_of_state(run_with(program, values, init),
                                           targets);
        values[p] = saved;
        result.gradient[p] = (plus - minus) / (2.0 * step);
    }
    return result;
}

GradResult gradient(const CircuitProgram &program, const Statevector &init,
                    const TargetMap &targets, GradMethod method,
                    double fd_step) {
    switch (method) {
    case GradMethod::Adjoint:
        return grad_adjoint(program, init, targets);
    case GradMethod::ParameterShift:
        return grad_parameter_shift(program, init, targets);
    case GradMethod::FiniteDifference:
        return grad_finite_difference(program, init, targets, fd_step);
    }
    throw DomainError("unknown gradient method");
}

TrainResult train(const ProblemSpec &spec, const TrainConfig &config) {
    if (spec.targets.empty()) {
        throw DomainError("training requires at least one target");
    }
    TrainResult result{compile(spec, config.compile, config.max_qubits),
                       prepare_from_features(spec.prior_vector(),
                                             config.max_qubits),
                       {},
                       0.0,
                       false};
    CircuitProgram &program = result.program;

    // Symmetry-breaking jitter on the trainable mixing angles only; the
    // draw order follows the parameter index so a seed fixes the run.
    if (config.mix_jitter != 0.0) {
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> jitter(-config.mix_jitter,
                                                      config.mix_jitter);
        for (std::size_t i = 0; i < program.params.size(); ++i) {
            const ParamInfo &info = program.params.info(i);
            if (!info.trainable) {
                continue;
            }
            if (info.family == ParamFamily::GammaY ||
                info.family == ParamFamily::GammaZ) {
                program.params.set_value(i, program.params.value(i) +
                                                jitter(rng));
            }
        }
    }

    const TargetMap targets = spec.target_map();
    const auto trainable = program.params.trainable_indices();

    std::vector<double> m(program.params.size(), 0.0);
    std::vector<double> v(program.params.size(), 0.0);
    std::size_t steps = 0;

    // A zero-epoch config still records the initial loss; it just never
    // steps, leaving every parameter untouched.
    const std::size_t sweeps = std::max<std::size_t>(config.epochs, 1);
    for (std::size_t epoch = 1; epoch <= sweeps; ++epoch) {
        const GradResult g = gradient(program, result.initial_state, targets,
                                      config.method, config.fd_step);
        double inf_norm = 0.0;
        for (std::size_t i : trainable) {
            inf_norm = std::max(inf_norm, std::abs(g.gradient[i]));
        }
        result.trace.push_back({epoch, g.loss, inf_norm});

        if (g.loss < config.loss_threshold) {
            result.converged = true;
            break;
        }
        if (epoch > config.epochs) {
            break;
        }

        ++steps;
        for (std::size_t i : trainable) {
            double update;
            if (config.optimizer == OptimizerKind::Adam) {
                m[i] = config.adam_beta1 * m[i] +
                       (1.0 - config.adam_beta1) * g.gradient[i];
                v[i] = config.adam_beta2 * v[i] +
                       (1.0 - config.adam_beta2) * g.gradient[i] *
                           g.gradient[i];
                const double m_hat =
                    m[i] / (1.0 - std::pow(config.adam_beta1,
                                           static_cast<double>(steps)));
                const double v_hat =
                    v[i] / (1.0 - std::pow(config.adam_beta2,
                                           static_cast<double>(steps)));
                update = config.learning_rate * m_hat /
                         (std::sqrt(v_hat) + config.adam_epsilon);
            } else {
                update = config.learning_rate * g.gradient[i];
            }
            program.params.set_value(i, program.params.value(i) - update);
        }
    }

    result.final_loss =
        evaluate_loss(program, result.initial_state, targets).total;
    return result;
}

} // namespace qreason
