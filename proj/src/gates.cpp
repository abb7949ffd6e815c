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

#include "qreason/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qreason {

namespace {

using Complex = std::complex<double>;
constexpr Complex kImag{0.0, 1.0};

/// OR of the single-qubit masks; rejects out-of-range and duplicate indices.
std::size_t combined_mask(const Statevector &s,
                          std::span<const std::size_t> qubits,
                          const char *what) {
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        const std::size_t bit = s.qubit_mask(q);
        if (mask & bit) {
            throw DomainError(std::string(what) + " lists qubit " +
                              std::to_string(q) + " twice");
        }
        mask |= bit;
    }
    return mask;
}

bool mode_satisfied(std::size_t basis, std::size_t ctrl_mask, RuleMode mode) {
    return mode == RuleMode::And ? (basis & ctrl_mask) == ctrl_mask
                                 : (basis & ctrl_mask) != 0;
}

/// Visits every amplitude pair (i, i | target_mask) with the target bit
/// clear in i.
template <typename Fn>
void for_each_pair(Statevector &s, std::size_t target_mask, Fn &&fn) {
    const std::size_t n = s.size();
    const std::size_t d = target_mask;
    for (std::size_t i0 = 0; i0 < n; i0 += 2 * d) {
        for (std::size_t i1 = 0; i1 < d; ++i1) {
            fn(i0 + i1);
        }
    }
}

std::vector<Complex> kron(const std::vector<Complex> &a, std::size_t da,
                          const std::vector<Complex> &b, std::size_t db) {
    std::vector<Complex> out(da * db * da * db);
    const std::size_t dim = da * db;
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out[(ra * db + rb) * dim + (ca * db + cb)] =
                        a[ra * da + ca] * b[rb * db + cb];
                }
            }
        }
    }
    return out;
}

/// Kronecker chain I ⊗ ... ⊗ M ⊗ ... ⊗ I with the 2x2 block at `qubit`
/// (qubit 0 is the leftmost factor).
DenseUnitary embed_single(const std::vector<Complex> &m2, std::size_t qubit,
                          std::size_t num_qubits) {
    const std::vector<Complex> id2{1.0, 0.0, 0.0, 1.0};
    std::vector<Complex> acc{1.0};
    std::size_t dim = 1;
    for (std::size_t q = 0; q < num_qubits; ++q) {
        acc = kron(acc, dim, q == qubit ? m2 : id2, 2);
        dim *= 2;
    }
    return DenseUnitary{dim, std::move(acc)};
}

void check_dense_size(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw DomainError("dense embedding of a zero-qubit system");
    }
    if (num_qubits > kDenseEmbedQubitLimit) {
        throw ResourceError("dense embedding limited to " +
                            std::to_string(kDenseEmbedQubitLimit) +
                            " qubits, got " + std::to_string(num_qubits));
    }
}

std::size_t mask_for(std::span<const std::size_t> qubits,
                     std::size_t num_qubits, const char *what) {
    // Same validation as the kernels, restated for the dense path where no
    // statevector exists yet.
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        if (q >= num_qubits) {
            throw DomainError(std::string(what) + " qubit " +
                              std::to_string(q) + " out of range");
        }
        const std::size_t bit = std::size_t{1} << (num_qubits - 1 - q);
        if (mask & bit) {
            throw DomainError(std::string(what) + " lists qubit " +
                              std::to_string(q) + " twice");
        }
        mask |= bit;
    }
    return mask;
}

} // namespace

void apply_rot_y(Statevector &s, std::size_t qubit, double angle) {
    const std::size_t mask = s.qubit_mask(qubit);
    const double c = std::cos(angle / 2.0);
    const double d = std::sin(angle / 2.0);
    for_each_pair(s, mask, [&](std::size_t i) {
        const Complex a0 = s[i];
        const Complex a1 = s[i | mask];
        s[i] = c * a0 - d * a1;
        s[i | mask] = d * a0 + c * a1;
    });
}

void apply_rot_z(Statevector &s, std::size_t qubit, double angle) {
    const std::size_t mask = s.qubit_mask(qubit);
    const Complex lo = std::polar(1.0, -angle / 2.0);
    const Complex hi = std::polar(1.0, +angle / 2.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] *= (i & mask) ? hi : lo;
    }
}

// The projector-style closed form I - (1 - e^{-i theta}) P (x) X_target,
// superficially analogous to the phase-gate identity, is not unitary away
// from theta = 0 (at theta = pi, ||U'U - I|| exceeds 1) because P (x) X is
// not idempotent. It is superseded by the exact rotation block below.
void apply_rule_gate(Statevector &s, std::span<const std::size_t> controls,
                     RuleMode mode, std::size_t target, double theta) {
    if (controls.empty()) {
        throw DomainError("rule gate requires at least one control");
    }
    const std::size_t target_mask = s.qubit_mask(target);
    const std::size_t ctrl_mask = combined_mask(s, controls, "rule controls");
    if (ctrl_mask & target_mask) {
        throw DomainError("rule target qubit " + std::to_string(target) +
                          " is also a control");
    }
    const double c = std::cos(theta / 2.0);
    const Complex ms = -kImag * std::sin(theta / 2.0);
    for_each_pair(s, target_mask, [&](std::size_t i) {
        if (!mode_satisfied(i, ctrl_mask, mode)) {
            return;
        }
        const Complex a0 = s[i];
        const Complex a1 = s[i | target_mask];
        s[i] = c * a0 + ms * a1;
        s[i | target_mask] = ms * a0 + c * a1;
    });
}

void apply_phase_gate(Statevector &s, std::span<const std::size_t> qubits,
                      double phi) {
    if (qubits.size() < 2) {
        throw DomainError("phase penalty requires at least two qubits");
    }
    const std::size_t mask = combined_mask(s, qubits, "phase subset");
    const Complex factor = std::polar(1.0, phi);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((i & mask) == mask) {
            s[i] *= factor;
        }
    }
}

void apply_gate(Statevector &s, const Gate &gate, double value) {
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, RotYGate>) {
                apply_rot_y(s, g.qubit, value);
            } else if constexpr (std::is_same_v<T, RotZGate>) {
                apply_rot_z(s, g.qubit, value);
            } else if constexpr (std::is_same_v<T, RuleGate>) {
                apply_rule_gate(s, g.controls, g.mode, g.target, value);
            } else {
                apply_phase_gate(s, g.qubits, value);
            }
        },
        gate);
}

void apply_gate_inverse(Statevector &s, const Gate &gate, double value) {
    apply_gate(s, gate, -value);
}

void apply_angle_generator(Statevector &s, const Gate &gate) {
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, RotYGate>) {
                // M = -i/2 Y: (a0, a1) -> (-a1/2, a0/2)
                const std::size_t mask = s.qubit_mask(g.qubit);
                for_each_pair(s, mask, [&](std::size_t i) {
                    const Complex a0 = s[i];
                    const Complex a1 = s[i | mask];
                    s[i] = -0.5 * a1;
                    s[i | mask] = 0.5 * a0;
                });
            } else if constexpr (std::is_same_v<T, RotZGate>) {
                // M = -i/2 Z
                const std::size_t mask = s.qubit_mask(g.qubit);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    s[i] *= (i & mask) ? 0.5 * kImag : -0.5 * kImag;
                }
            } else if constexpr (std::is_same_v<T, RuleGate>) {
                // M = -i/2 (P ⊗ X); P annihilates unselected pairs.
                const std::size_t target_mask = s.qubit_mask(g.target);
                const std::size_t ctrl_mask =
                    combined_mask(s, g.controls, "rule controls");
                for_each_pair(s, target_mask, [&](std::size_t i) {
                    if (!mode_satisfied(i, ctrl_mask, g.mode)) {
                        s[i] = 0.0;
                        s[i | target_mask] = 0.0;
                        return;
                    }
                    const Complex a0 = s[i];
                    const Complex a1 = s[i | target_mask];
                    s[i] = -0.5 * kImag * a1;
                    s[i | target_mask] = -0.5 * kImag * a0;
                });
            } else {
                // M = i P
                const std::size_t mask = combined_mask(s, g.qubits, "phase subset");
                for (std::size_t i = 0; i < s.size(); ++i) {
                    s[i] = ((i & mask) == mask) ? kImag * s[i] : 0.0;
                }
            }
        },
        gate);
}

Statevector DenseUnitary::apply(const Statevector &s) const {
    if (s.size() != dim) {
        throw DomainError("dense unitary dimension does not match state");
    }
    std::vector<Complex> out(dim, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim; ++c) {
            acc += at(r, c) * s[c];
        }
        out[r] = acc;
    }
    return Statevector::from_amplitudes(s.num_qubits(), std::move(out));
}

DenseUnitary dense_embed(const Gate &gate, double value,
                         std::size_t num_qubits) {
    check_dense_size(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;

    return std::visit(
        [&](const auto &g) -> DenseUnitary {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, RotYGate>) {
                const double c = std::cos(value / 2.0);
                const double d = std::sin(value / 2.0);
                mask_for(std::span(&g.qubit, 1), num_qubits, "rotation");
                return embed_single({c, -d, d, c}, g.qubit, num_qubits);
            } else if constexpr (std::is_same_v<T, RotZGate>) {
                mask_for(std::span(&g.qubit, 1), num_qubits, "rotation");
                return embed_single({std::polar(1.0, -value / 2.0), 0.0, 0.0,
                                     std::polar(1.0, +value / 2.0)},
                                    g.qubit, num_qubits);
            } else if constexpr (std::is_same_v<T, RuleGate>) {
                if (g.controls.empty()) {
                    throw DomainError("rule gate requires at least one control");
                }
                const std::size_t ctrl_mask =
                    mask_for(g.controls, num_qubits, "rule controls");
                const std::size_t target_mask =
                    mask_for(std::span(&g.target, 1), num_qubits, "rule target");
                if (ctrl_mask & target_mask) {
                    throw DomainError("rule target qubit " +
                                      std::to_string(g.target) +
                                      " is also a control");
                }
                // exp(-i t G) with G = P ⊗ X and G^2 = P_full:
                //   U = I + (cos t - 1) P_full - i sin t G,  t = value/2.
                DenseUnitary x_full =
                    embed_single({0.0, 1.0, 1.0, 0.0}, g.target, num_qubits);
                DenseUnitary u{dim, std::vector<Complex>(dim * dim, 0.0)};
                const double t = value / 2.0;
                for (std::size_t r = 0; r < dim; ++r) {
                    const bool selected = mode_satisfied(r, ctrl_mask, g.mode);
                    u.at(r, r) = 1.0;
                    if (!selected) {
                        continue;
                    }
                    u.at(r, r) += std::cos(t) - 1.0;
                    for (std::size_t c = 0; c < dim; ++c) {
                        u.at(r, c) += -kImag * std::sin(t) * x_full.at(r, c);
                    }
                }
                return u;
            } else {
                if (g.qubits.size() < 2) {
                    throw DomainError(
                        "phase penalty requires at least two qubits");
                }
                const std::size_t mask =
                    mask_for(g.qubits, num_qubits, "phase subset");
                // exp(i phi P) is diagonal: e^{i phi} on the selected subspace.
                DenseUnitary u{dim, std::vector<Complex>(dim * dim, 0.0)};
                for (std::size_t r = 0; r < dim; ++r) {
                    u.at(r, r) = ((r & mask) == mask) ? std::polar(1.0, value)
                                                      : Complex{1.0, 0.0};
                }
                return u;
            }
        },
        gate);
}

} // namespace qreason
