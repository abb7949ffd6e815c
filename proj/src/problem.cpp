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

#include "qreason/problem.hpp"

#include <algorithm>

namespace qreason {

std::optional<std::size_t> ProblemSpec::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < propositions.size(); ++i) {
        if (propositions[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::string> ProblemSpec::names() const {
    std::vector<std::string> out;
    out.reserve(propositions.size());
    for (const auto &p : propositions) {
        out.push_back(p.name);
    }
    return out;
}

std::vector<double> ProblemSpec::prior_vector() const {
    std::vector<double> out(propositions.size(), kDefaultPrior);
    for (const auto &p : priors) {
        if (auto idx = index_of(p.name)) {
            out[*idx] = p.value;
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, int>> ProblemSpec::target_map() const {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto &t : targets) {
        if (auto idx = index_of(t.name)) {
            out.emplace_back(*idx, t.value);
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
ProblemSpec::pair_queries() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto &q : queries) {
        if (q.names.size() != 2) {
            continue;
        }
        auto a = index_of(q.names[0]);
        auto b = index_of(q.names[1]);
        if (a && b) {
            out.emplace_back(*a, *b);
        }
    }
    return out;
}

bool operator==(const ProblemSpec &a, const ProblemSpec &b) {
    if (a.names() != b.names() || a.layers != b.layers) {
        return false;
    }
    if (a.prior_vector() != b.prior_vector()) {
        return false;
    }
    auto rule_eq = [](const RuleDecl &x, const RuleDecl &y) {
        // AND and OR projectors coincide at arity 1, and the text form drops
        // the separator there, so the mode only distinguishes wider rules.
        const bool mode_matters = x.antecedents.size() > 1;
        return x.antecedents == y.antecedents &&
               (!mode_matters || x.mode == y.mode) &&
               x.consequent == y.consequent && x.theta == y.theta &&
               x.trainable == y.trainable;
    };
    if (!std::equal(a.rules.begin(), a.rules.end(), b.rules.begin(),
                    b.rules.end(), rule_eq)) {
        return false;
    }
    auto cons_eq = [](const ConstraintDecl &x, const ConstraintDecl &y) {
        return x.members == y.members && x.phi == y.phi &&
               x.trainable == y.trainable;
    };
    if (!std::equal(a.constraints.begin(), a.constraints.end(),
                    b.constraints.begin(), b.constraints.end(), cons_eq)) {
        return false;
    }
    auto target_eq = [](const TargetDecl &x, const TargetDecl &y) {
        return x.name == y.name && x.value == y.value;
    };
    if (!std::equal(a.targets.begin(), a.targets.end(), b.targets.begin(),
                    b.targets.end(), target_eq)) {
        return false;
    }
    auto query_eq = [](const QueryDecl &x, const QueryDecl &y) {
        return x.names == y.names;
    };
    return std::equal(a.queries.begin(), a.queries.end(), b.queries.begin(),
                      b.queries.end(), query_eq);
}

} // namespace qreason
