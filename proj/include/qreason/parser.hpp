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
 * @file parser.hpp
 * Line-oriented `.qrp` problem DSL: parse, validate, serialize.
 *
 *   prop  NAME+
 *   prior NAME FLOAT                       # in [0,1]
 *   rule  NAME (& NAME)* => NAME [theta=FLOAT[!]]
 *   rule  NAME (| NAME)* => NAME [theta=FLOAT[!]]
 *   excl  NAME NAME+ [phi=FLOAT[!]]
 *   layers INT
 *   target NAME 0|1
 *   query NAME [NAME]
 *
 * `#` starts a comment; blank lines are ignored; a trailing `!` on a value
 * freezes the parameter (non-trainable). All errors are collected rather
 * than stopping at the first.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qreason/problem.hpp"

namespace qreason {

struct SourceSpan {
    int line = 1;   // 1-based
    int column = 1; // 1-based
};

enum class ParseErrorKind { Syntax, UnknownName, DuplicateName, Range, Arity };

std::string_view to_string(ParseErrorKind kind);

struct ParseError {
    SourceSpan span;
    ParseErrorKind kind = ParseErrorKind::Syntax;
    std::string message;
};

/// "line:col: kind: message"; the CLI prints one diagnostic per line.
std::string format_error(const ParseError &error);

struct ParseResult {
    std::optional<ProblemSpec> spec;
    std::vector<ParseError> errors;

    [[nodiscard]] bool ok() const { return errors.empty() && spec.has_value(); }
};

/// Parses UTF-8 DSL text (LF or CRLF). On failure every detected error is
/// reported and `spec` is empty.
ParseResult parse(std::string_view text, std::size_t max_qubits = kQubitCap);

/// Semantic validation of a (possibly hand-built) spec: unique names,
/// resolvable references, priors in range, constraint arity, layer count,
/// and the qubit cap. Empty result means valid.
std::vector<ParseError> validate(const ProblemSpec &spec,
                                 std::size_t max_qubits = kQubitCap);

/// Canonical text form: one prop line, explicit priors for every
/// proposition, rules, excl, layers, targets, queries. Parsing the output
/// reproduces a structurally equal spec.
std::string serialize(const ProblemSpec &spec);

} // namespace qreason
