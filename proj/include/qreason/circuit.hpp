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
 * @file circuit.hpp
 * Compilation of a ProblemSpec into a layered gate program with a named
 * parameter store, and exact forward evolution of that program.
 *
 * Each of the L layers emits, in order: every rule gate (declaration
 * order), every exclusion phase gate (declaration order), then a mixing
 * block of Ry followed by Rz on each qubit (qubit order). Every layer owns
 * an independent copy of each parameter.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qreason/gates.hpp"
#include "qreason/problem.hpp"
#include "qreason/statevector.hpp"

namespace qreason {

enum class ParamFamily { Theta, Phi, GammaY, GammaZ };

std::string_view to_string(ParamFamily family);

struct ParamInfo {
    std::string name;
    ParamFamily family = ParamFamily::Theta;
    bool trainable = true;
};

/**
 * @brief Flat ordered collection of named circuit parameters.
 *
 * Order matches first registration (compile emits gate order), names are
 * unique, and values live in a contiguous vector so optimizers can treat
 * the store as a plain parameter vector.
 */
class ParameterStore {
  public:
    /// Registers a parameter; throws DomainError on a duplicate name.
    std::size_t add(std::string name, ParamFamily family, double value,
                    bool trainable);

    [[nodiscard]] std::size_t size() const { return info_.size(); }
    [[nodiscard]] const ParamInfo &info(std::size_t i) const {
        return info_[i];
    }
    [[nodiscard]] double value(std::size_t i) const { return values_[i]; }
    void set_value(std::size_t i, double v) { values_[i] = v; }

    [[nodiscard]] const std::vector<double> &values() const { return values_; }
    std::vector<double> &values() { return values_; }

    /// Index lookup by name.
    [[nodiscard]] std::optional<std::size_t>
    find(std::string_view name) const;

    /// Indices of trainable parameters, ascending.
    [[nodiscard]] std::vector<std::size_t> trainable_indices() const;

  private:
    std::vector<ParamInfo> info_;
    std::vector<double> values_;
};

struct CompileOptions {
    /// When false the final layer stops after its phase block, leaving the
    /// logical amplitudes unmixed for direct inspection.
    bool final_mix = true;
};

/**
 * @brief A compiled program: gate list plus parameter store.
 *
 * `layer_ends[k]` is the index one past the last gate of layer k+1, so
 * gates[layer_ends[k-1] .. layer_ends[k]) is exactly layer k+1.
 */
struct CircuitProgram {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    std::vector<std::size_t> layer_ends;
    ParameterStore params;

    [[nodiscard]] std::size_t num_layers() const { return layer_ends.size(); }
};

/**
 * @brief Compiles `spec` into a CircuitProgram.
 *
 * Parameter names are "L{layer}.rule{i}.theta", "L{layer}.excl{i}.phi",
 * "L{layer}.q{q}.gamma_y" and "L{layer}.q{q}.gamma_z" with 1-based layers
 * and declaration-order rule/constraint indices. Initial values come from
 * the declarations (rules, constraints) or kDefaultMixAngle (mixers).
 * Compilation is pure: equal specs compile to identical programs.
 *
 * Throws CompileError when the spec fails validation and ResourceError
 * when the proposition count exceeds `max_qubits`.
 */
CircuitProgram compile(const ProblemSpec &spec, const CompileOptions &options,
                       std::size_t max_qubits = kQubitCap);

CircuitProgram compile(const ProblemSpec &spec,
                       std::size_t max_qubits = kQubitCap);

/// Evolves `init` through every gate of `program`. Pure: the input is
/// never mutated and identical calls produce bit-identical outputs.
[[nodiscard]] Statevector forward(const CircuitProgram &program,
                                  const Statevector &init);

/// Un-applies the whole program: forward_inverse(forward(s)) equals s up
/// to rounding.
[[nodiscard]] Statevector forward_inverse(const CircuitProgram &program,
                                          const Statevector &final_state);

/**
 * @brief Evolves `init` through the first `layers` layers only.
 *
 * `layers` = 0 returns the input unchanged; values above num_layers()
 * throw DomainError.
 */
[[nodiscard]] Statevector forward_layers(const CircuitProgram &program,
                                         const Statevector &init,
                                         std::size_t layers);

/// Exactly one line per gate, in application order: layer tag, family,
/// qubits, and the resolved parameter name and current value.
std::string dump_program(const CircuitProgram &program);

} // namespace qreason
