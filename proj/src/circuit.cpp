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

#include "qreason/circuit.hpp"

#include <sstream>
#include <unordered_map>

#include "qreason/errors.hpp"
#include "qreason/parser.hpp"
#include "qreason/util.hpp"

namespace qreason {

namespace {

std::size_t param_of(const Gate &gate) {
    return std::visit([](const auto &g) { return g.param; }, gate);
}

std::string gate_line(const Gate &gate, const ParameterStore &params,
                      std::size_t layer) {
    std::ostringstream out;
    const std::size_t p = param_of(gate);
    out << "L" << layer << " ";
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, RotYGate>) {
                out << "roty q" << g.qubit;
            } else if constexpr (std::is_same_v<T, RotZGate>) {
                out << "rotz q" << g.qubit;
            } else if constexpr (std::is_same_v<T, RuleGate>) {
                out << "rule ";
                for (std::size_t i = 0; i < g.controls.size(); ++i) {
                    if (i > 0) {
                        out << (g.mode == RuleMode::And ? " & " : " | ");
                    }
                    out << "q" << g.controls[i];
                }
                out << " => q" << g.target;
            } else {
                out << "excl";
                for (std::size_t q : g.qubits) {
                    out << " q" << q;
                }
            }
        },
        gate);
    out << "  " << params.info(p).name << "=" << format_double(params.value(p));
    if (!params.info(p).trainable) {
        out << " (frozen)";
    }
    return out.str();
}

} // namespace

std::string_view to_string(ParamFamily family) {
    switch (family) {
    case ParamFamily::Theta:
        return "theta";
    case ParamFamily::Phi:
        return "phi";
    case ParamFamily::GammaY:
        return "gamma_y";
    case ParamFamily::GammaZ:
        return "gamma_z";
    }
    return "theta";
}

std::size_t ParameterStore::add(std::string name, ParamFamily family,
                                double value, bool trainable) {
    if (find(name)) {
        throw DomainError("duplicate parameter name '" + name + "'");
    }
    info_.push_back({std::move(name), family, trainable});
    values_.push_back(value);
    return info_.size() - 1;
}

std::optional<std::size_t> ParameterStore::find(std::string_view name) const {
    for (std::size_t i = 0; i < info_.size(); ++i) {
        if (info_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> ParameterStore::trainable_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < info_.size(); ++i) {
        if (info_[i].trainable) {
            out.push_back(i);
        }
    }
    return out;
}

CircuitProgram compile(const ProblemSpec &spec, const CompileOptions &options,
                       std::size_t max_qubits) {
    if (spec.num_qubits() > max_qubits) {
        throw ResourceError(std::to_string(spec.num_qubits()) +
                            " propositions exceed the qubit cap of " +
                            std::to_string(max_qubits));
    }
    auto errors = validate(spec, max_qubits);
    if (!errors.empty()) {
        throw CompileError("invalid problem: " + format_error(errors.front()));
    }

    // Resolve names once; validate() guarantees every lookup succeeds.
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < spec.propositions.size(); ++i) {
        index.emplace(spec.propositions[i].name, i);
    }

    CircuitProgram program;
    program.num_qubits = spec.num_qubits();

    for (std::size_t layer = 1; layer <= spec.layers; ++layer) {
        const std::string prefix = "L" + std::to_string(layer) + ".";
        const bool mix = options.final_mix || layer < spec.layers;

        for (std::size_t i = 0; i < spec.rules.size(); ++i) {
            const RuleDecl &r = spec.rules[i];
            RuleGate gate;
            gate.controls.reserve(r.antecedents.size());
            for (const auto &a : r.antecedents) {
                gate.controls.push_back(index.at(a));
            }
            gate.mode = r.mode;
            gate.target = index.at(r.consequent);
            gate.param = program.params.add(
                prefix + "rule" + std::to_string(i) + ".theta",
                ParamFamily::Theta, r.theta, r.trainable);
            program.gates.emplace_back(std::move(gate));
        }

        for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
            const ConstraintDecl &c = spec.constraints[i];
            PhaseGate gate;
            gate.qubits.reserve(c.members.size());
            for (const auto &m : c.members) {
                gate.qubits.push_back(index.at(m));
            }
            gate.param = program.params.add(
                prefix + "excl" + std::to_string(i) + ".phi", ParamFamily::Phi,
                c.phi, c.trainable);
            program.gates.emplace_back(std::move(gate));
        }

        if (mix) {
            for (std::size_t q = 0; q < program.num_qubits; ++q) {
                const std::string qp = prefix + "q" + std::to_string(q) + ".";
                RotYGate ry{q, program.params.add(qp + "gamma_y",
                                                  ParamFamily::GammaY,
                                                  kDefaultMixAngle, true)};
                program.gates.emplace_back(ry);
                RotZGate rz{q, program.params.add(qp + "gamma_z",
                                                  ParamFamily::GammaZ,
                                                  kDefaultMixAngle, true)};
                program.gates.emplace_back(rz);
            }
        }

        program.layer_ends.push_back(program.gates.size());
    }
    return program;
}

CircuitProgram compile(const ProblemSpec &spec, std::size_t max_qubits) {
    return compile(spec, CompileOptions{}, max_qubits);
}

Statevector forward(const CircuitProgram &program, const Statevector &init) {
    return forward_layers(program, init, program.num_layers());
}

Statevector forward_inverse(const CircuitProgram &program,
                            const Statevector &final_state) {
    if (final_state.num_qubits() != program.num_qubits) {
        throw DomainError("state qubit count does not match the program");
    }
    Statevector state = final_state;
    for (std::size_t i = program.gates.size(); i-- > 0;) {
        const Gate &gate = program.gates[i];
        apply_gate_inverse(state, gate, program.params.value(param_of(gate)));
    }
    return state;
}

Statevector forward_layers(const CircuitProgram &program,
                           const Statevector &init, std::size_t layers) {
    if (init.num_qubits() != program.num_qubits) {
        throw DomainError("state qubit count does not match the program");
    }
    if (layers > program.num_layers()) {
        throw DomainError("layer index " + std::to_string(layers) +
                          " exceeds circuit depth " +
                          std::to_string(program.num_layers()));
    }
    Statevector state = init;
    const std::size_t end = layers == 0 ? 0 : program.layer_ends[layers - 1];
    for (std::size_t i = 0; i < end; ++i) {
        const Gate &gate = program.gates[i];
        apply_gate(state, gate, program.params.value(param_of(gate)));
    }
    return state;
}

std::string dump_program(const CircuitProgram &program) {
    std::ostringstream out;
    std::size_t layer = 0;
    std::size_t start = 0;
    // Exactly one line per gate; tools count lines against the compile
    // contract.
    for (std::size_t end : program.layer_ends) {
        ++layer;
        for (std::size_t i = start; i < end; ++i) {
            out << gate_line(program.gates[i], program.params, layer) << "\n";
        }
        start = end;
    }
    return out.str();
}

} // namespace qreason
