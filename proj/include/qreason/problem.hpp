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
 * @file problem.hpp
 * Declarative description of a logic problem: propositions, priors,
 * implication rules, exclusion constraints, depth, training targets and
 * readout queries. Produced by the DSL parser or constructed directly.
 */

#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qreason/gates.hpp"

namespace qreason {

inline constexpr double kDefaultPrior = 0.5;
inline constexpr double kDefaultTheta = std::numbers::pi / 2.0;
inline constexpr double kDefaultPhi = std::numbers::pi;
inline constexpr double kDefaultMixAngle = 0.05;

// `line` fields are 1-based source lines when parsed from a file and 0 when
// the declaration was built programmatically.

struct PropositionDecl {
    std::string name;
    int line = 0;
};

struct PriorDecl {
    std::string name;
    double value = kDefaultPrior;
    int line = 0;
};

struct RuleDecl {
    std::vector<std::string> antecedents;
    RuleMode mode = RuleMode::And;
    std::string consequent;
    double theta = kDefaultTheta;
    bool trainable = true;
    int line = 0;
};

struct ConstraintDecl {
    std::vector<std::string> members; // all-true assignments are penalized
    double phi = kDefaultPhi;
    bool trainable = true;
    int line = 0;
};

struct TargetDecl {
    std::string name;
    int value = 0; // 0 or 1
    int line = 0;
};

struct QueryDecl {
    std::vector<std::string> names; // one name (y_hat) or two (ZZ correlator)
    int line = 0;
};

struct ProblemSpec {
    std::vector<PropositionDecl> propositions;
    std::vector<PriorDecl> priors; // explicit declarations only
    std::vector<RuleDecl> rules;
    std::vector<ConstraintDecl> constraints;
    std::size_t layers = 1;
    int layers_line = 0;
    std::vector<TargetDecl> targets;
    std::vector<QueryDecl> queries;

    [[nodiscard]] std::size_t num_qubits() const { return propositions.size(); }

    /// Qubit index of a proposition (declaration order), if declared.
    [[nodiscard]] std::optional<std::size_t>
    index_of(std::string_view name) const;

    [[nodiscard]] std::vector<std::string> names() const;

    /// Per-proposition prior vector with kDefaultPrior for undeclared ones.
    [[nodiscard]] std::vector<double> prior_vector() const;

    /// Targets resolved to (qubit index, 0/1), declaration order.
    [[nodiscard]] std::vector<std::pair<std::size_t, int>> target_map() const;

    /// Two-name queries resolved to qubit index pairs, declaration order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>>
    pair_queries() const;
};

/// Structural equality over resolved content: source line numbers are
/// ignored, priors compare via the resolved per-proposition vector, and the
/// rule mode is ignored at arity 1 where AND and OR coincide.
bool operator==(const ProblemSpec &a, const ProblemSpec &b);

} // namespace qreason
